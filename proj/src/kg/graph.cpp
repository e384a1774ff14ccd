#include "revrec/kg/graph.hpp"

#include <algorithm>
#include <fstream>

#include "revrec/errors.hpp"

namespace revrec::kg {

namespace {

// Parses one `<iri>` token starting at pos, advancing pos past it.
std::optional<std::string> take_angle_token(const std::string& line, std::size_t& pos) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size() || line[pos] != '<') return std::nullopt;
    const std::size_t close = line.find('>', pos);
    if (close == std::string::npos) return std::nullopt;
    std::string token = line.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    return token;
}

} // namespace

Graph Graph::from_triples(std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    Graph g;
    g.triples_ = std::move(triples);
    for (const Triple& t : g.triples_) {
        g.forward_[t.subject][t.property].insert(t.object);
        g.inverse_[t.object][t.property].insert(t.subject);
    }
    return g;
}

Graph Graph::load(const std::filesystem::path& path, LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read graph file " + path.string());

    LoadStats local;
    std::vector<Triple> triples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;

        auto subject = take_angle_token(line, pos);
        auto property = subject ? take_angle_token(line, pos) : std::nullopt;
        if (!subject || !property)
            throw ParseError(path.string(), line_no, "expected `<s> <p> <o> .`");

        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos < line.size() && line[pos] == '"') {
            // Literal object: the statement is dropped, only counted.
            ++local.literals_skipped;
            continue;
        }
        auto object = take_angle_token(line, pos);
        if (!object) throw ParseError(path.string(), line_no, "expected `<s> <p> <o> .`");

        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size() || line[pos] != '.')
            throw ParseError(path.string(), line_no, "missing terminating `.`");

        try {
            triples.push_back(Triple{Iri(*subject), Iri(*property), Iri(*object)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }

    const std::size_t raw = triples.size();
    Graph g = from_triples(std::move(triples));
    local.triples = g.size();
    local.duplicates = raw - g.size();
    if (stats) *stats = local;
    return g;
}

bool Graph::has_triple(const Iri& s, const Iri& p, const Iri& o) const {
    const auto it = forward_.find(s);
    if (it == forward_.end()) return false;
    const auto pit = it->second.find(p);
    return pit != it->second.end() && pit->second.count(o) > 0;
}

std::set<Iri> Graph::neighbors(const Iri& node, const Iri& property, Direction direction) const {
    const auto& index = direction == Direction::Direct ? forward_ : inverse_;
    const auto it = index.find(node);
    if (it == index.end()) return {};
    const auto pit = it->second.find(property);
    if (pit == it->second.end()) return {};
    return pit->second;
}

std::set<Iri> Graph::types_of(const Iri& entity, const Iri& type_property,
                              const std::optional<std::string>& namespace_prefix) const {
    std::set<Iri> types = neighbors(entity, type_property, Direction::Direct);
    if (!namespace_prefix) return types;
    std::set<Iri> filtered;
    for (const Iri& t : types)
        if (t.str().starts_with(*namespace_prefix)) filtered.insert(t);
    return filtered;
}

const Graph::PropMap* Graph::forward(const Iri& node) const {
    const auto it = forward_.find(node);
    return it == forward_.end() ? nullptr : &it->second;
}

const Graph::PropMap* Graph::inverse(const Iri& node) const {
    const auto it = inverse_.find(node);
    return it == inverse_.end() ? nullptr : &it->second;
}

} // namespace revrec::kg
