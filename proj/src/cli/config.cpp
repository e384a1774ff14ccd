#include "revrec/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "revrec/errors.hpp"

namespace revrec::cli {

namespace {

std::string trim(const std::string& s) {
    const std::size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return {};
    const std::size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

struct KeyValueFile {
    // section -> ordered (key, value) pairs
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;

    std::optional<std::string> get(const std::string& section, const std::string& key) const {
        std::optional<std::string> found;
        for (const auto& [k, v] : entries(section)) {
            if (k != key) continue;
            if (found) throw ValidationError("config key [" + section + "] " + key +
                                             " given more than once");
            found = v;
        }
        return found;
    }

    std::vector<std::string> get_all(const std::string& section, const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : entries(section))
            if (k == key) out.push_back(v);
        return out;
    }

private:
    const std::vector<std::pair<std::string, std::string>>& entries(const std::string& s) const {
        static const std::vector<std::pair<std::string, std::string>> none;
        const auto it = sections.find(s);
        return it == sections.end() ? none : it->second;
    }
};

KeyValueFile parse_key_value_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());

    KeyValueFile file;
    std::string section;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ParseError(path.string(), line_no, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            file.sections.try_emplace(section);
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError(path.string(), line_no, "expected `key = value`");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError(path.string(), line_no, "empty key");
        file.sections[section].emplace_back(key, value);
    }
    return file;
}

double parse_double(const std::string& context, const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(context + ": bad number '" + s + "'");
    }
}

long long parse_int(const std::string& context, const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(context + ": bad integer '" + s + "'");
    }
}

bool parse_bool(const std::string& context, const std::string& s) {
    if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
    if (s == "false" || s == "no" || s == "off" || s == "0") return false;
    throw ValidationError(context + ": bad boolean '" + s + "'");
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream stream(s);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

} // namespace

rec::RecConfig parse_grid_row(const std::string& value, double default_alpha) {
    const std::vector<std::string> tokens = split_ws(value);
    if (tokens.empty()) throw ValidationError("empty configuration row");

    rec::RecConfig row;
    row.name = tokens[0];
    row.alpha = default_alpha;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos)
            throw ValidationError(row.name + ": expected key=value, got '" + tokens[i] + "'");
        const std::string key = tokens[i].substr(0, eq);
        const std::string val = tokens[i].substr(eq + 1);
        if (key == "ranking")
            row.ranking = rec::ranking_from_string(val);
        else if (key == "discovered")
            row.use_discovered = parse_bool(row.name, val);
        else if (key == "threshold")
            row.occurrence_threshold = parse_double(row.name, val);
        else if (key == "alpha")
            row.alpha = parse_double(row.name, val);
        else if (key == "eta")
            row.eta = parse_double(row.name, val);
        else if (key == "kappa")
            row.kappa = parse_double(row.name, val);
        else
            throw ValidationError(row.name + ": unknown configuration key '" + key + "'");
    }
    row.validate();
    return row;
}

namespace {

// A typo in a key would otherwise fall back to a default and silently change
// experiment results.
void reject_unknown_keys(const KeyValueFile& file) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"paths", {"graph", "reviews", "gazetteer", "ratings", "mapping", "out"}},
        {"domain", {"name"}},
        {"annotation", {"type_property", "type_namespace", "filter_by_type"}},
        {"discovery", {"property"}},
        {"recommendation", {"alpha", "config"}},
        {"evaluation",
         {"folds", "top_n", "seed", "rating_scale", "positive_threshold", "baselines", "knn_k"}},
    };
    for (const auto& [section, entries] : file.sections) {
        const auto it = known.find(section);
        if (it == known.end()) throw ValidationError("unknown config section [" + section + "]");
        for (const auto& [key, value] : entries)
            if (!it->second.count(key))
                throw ValidationError("unknown config key [" + section + "] " + key);
    }
}

} // namespace

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
    const KeyValueFile file = parse_key_value_file(path);
    reject_unknown_keys(file);
    PipelineConfig config;
    config.config_dir = path.has_parent_path() ? path.parent_path() : ".";

    const auto resolve = [&](const std::string& value) -> std::filesystem::path {
        std::filesystem::path p(value);
        return p.is_absolute() ? p : config.config_dir / p;
    };

    if (const auto v = file.get("paths", "graph")) config.graph = resolve(*v);
    if (const auto v = file.get("paths", "reviews")) config.reviews = resolve(*v);
    if (const auto v = file.get("paths", "gazetteer")) config.gazetteer = resolve(*v);
    if (const auto v = file.get("paths", "ratings")) config.ratings = resolve(*v);
    if (const auto v = file.get("paths", "mapping")) config.mapping = resolve(*v);
    if (const auto v = file.get("paths", "out")) config.out = resolve(*v);

    if (const auto v = file.get("domain", "name")) config.domain = *v;

    if (const auto v = file.get("annotation", "type_property")) {
        try {
            config.type_property = Iri(*v);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("type_property: ") + e.what());
        }
    }
    if (const auto v = file.get("annotation", "type_namespace")) config.type_namespace = *v;
    if (const auto v = file.get("annotation", "filter_by_type"))
        config.filter_by_type = parse_bool("filter_by_type", *v);

    for (const std::string& value : file.get_all("discovery", "property")) {
        const std::vector<std::string> tokens = split_ws(value);
        if (tokens.size() != 2)
            throw ValidationError("discovery property needs `<iri> direct|inverse`: '" + value + "'");
        kg::Direction direction;
        if (tokens[1] == "direct")
            direction = kg::Direction::Direct;
        else if (tokens[1] == "inverse")
            direction = kg::Direction::Inverse;
        else
            throw ValidationError("discovery direction must be direct or inverse: '" + value + "'");
        try {
            config.discovery_specs.push_back(kg::PropertySpec{Iri(tokens[0]), direction});
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("discovery property: ") + e.what());
        }
    }

    double default_alpha = 0.5;
    if (const auto v = file.get("recommendation", "alpha"))
        default_alpha = parse_double("alpha", *v);
    for (const std::string& value : file.get_all("recommendation", "config"))
        config.grid.push_back(parse_grid_row(value, default_alpha));
    for (std::size_t i = 0; i < config.grid.size(); ++i)
        for (std::size_t j = i + 1; j < config.grid.size(); ++j)
            if (config.grid[i].name == config.grid[j].name)
                throw ValidationError("duplicate configuration row '" + config.grid[i].name + "'");

    if (const auto v = file.get("evaluation", "folds"))
        config.folds = static_cast<int>(parse_int("folds", *v));
    if (const auto v = file.get("evaluation", "top_n"))
        config.top_n = static_cast<std::size_t>(parse_int("top_n", *v));
    if (const auto v = file.get("evaluation", "seed"))
        config.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
    if (const auto v = file.get("evaluation", "rating_scale"))
        config.rating_scale = parse_double("rating_scale", *v);
    if (const auto v = file.get("evaluation", "positive_threshold"))
        config.positive_threshold = parse_double("positive_threshold", *v);
    if (const auto v = file.get("evaluation", "knn_k"))
        config.knn_k = static_cast<std::size_t>(parse_int("knn_k", *v));
    if (const auto v = file.get("evaluation", "baselines")) {
        std::string token;
        std::istringstream stream(*v);
        while (std::getline(stream, token, ',')) {
            token = trim(token);
            if (token.empty()) continue;
            if (token != "popular" && token != "random" && token != "knn")
                throw ValidationError("unknown baseline '" + token + "'");
            config.baselines.push_back(token);
        }
    }
    return config;
}

const rec::RecConfig& PipelineConfig::grid_row(const std::string& name) const {
    const auto it = std::find_if(grid.begin(), grid.end(),
                                 [&](const rec::RecConfig& row) { return row.name == name; });
    if (it == grid.end()) throw ValidationError("unknown configuration row '" + name + "'");
    return *it;
}

} // namespace revrec::cli
