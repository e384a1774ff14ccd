#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "revrec/iri.hpp"

namespace revrec::kg {

// One-to-one correspondences between equivalent resources of two knowledge
// bases. A source offered with two or more distinct targets is dropped
// entirely, to avoid propagating a probable inconsistency.
class MappingTable {
public:
    MappingTable() = default;

    static MappingTable from_pairs(const std::vector<std::pair<Iri, Iri>>& raw);

    // TSV `source_iri<TAB>target_iri`, no header.
    static MappingTable load(const std::filesystem::path& path);

    std::optional<Iri> target(const Iri& source) const;
    const std::map<Iri, Iri>& entries() const { return entries_; }
    std::vector<std::pair<Iri, Iri>> pairs() const;
    bool empty() const { return entries_.empty(); }

private:
    std::map<Iri, Iri> entries_;
};

} // namespace revrec::kg
