#include "revrec/kg/mapping.hpp"

#include <set>

#include "revrec/errors.hpp"
#include "revrec/tsv.hpp"

namespace revrec::kg {

MappingTable MappingTable::from_pairs(const std::vector<std::pair<Iri, Iri>>& raw) {
    std::map<Iri, std::set<Iri>> targets;
    for (const auto& [source, target] : raw) targets[source].insert(target);

    MappingTable table;
    for (const auto& [source, candidates] : targets)
        if (candidates.size() == 1) table.entries_.emplace(source, *candidates.begin());
    return table;
}

MappingTable MappingTable::load(const std::filesystem::path& path) {
    std::vector<std::pair<Iri, Iri>> raw;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 2)
            throw ParseError(path.string(), line_no, "expected 2 tab-separated fields");
        try {
            raw.emplace_back(Iri(fields[0]), Iri(fields[1]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return from_pairs(raw);
}

std::optional<Iri> MappingTable::target(const Iri& source) const {
    const auto it = entries_.find(source);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<Iri, Iri>> MappingTable::pairs() const {
    std::vector<std::pair<Iri, Iri>> out;
    out.reserve(entries_.size());
    for (const auto& [source, target] : entries_) out.emplace_back(source, target);
    return out;
}

} // namespace revrec::kg
