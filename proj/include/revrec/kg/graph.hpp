#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "revrec/iri.hpp"

namespace revrec::kg {

enum class Direction { Direct, Inverse };

struct Triple {
    Iri subject;
    Iri property;
    Iri object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct LoadStats {
    std::size_t triples = 0;
    std::size_t literals_skipped = 0;
    std::size_t duplicates = 0;
};

// Immutable resource-to-resource triple store with forward (subject->property
// ->objects) and inverse (object->property->subjects) indexes. All queries are
// safe for concurrent readers.
class Graph {
public:
    using PropMap = std::map<Iri, std::set<Iri>>;

    Graph() = default;
    static Graph from_triples(std::vector<Triple> triples);

    // One statement per line: `<s> <p> <o> .`  Lines starting with `#` and
    // blank lines are ignored; quoted (literal) objects are skipped and
    // counted in stats.
    static Graph load(const std::filesystem::path& path, LoadStats* stats = nullptr);

    std::size_t size() const { return triples_.size(); }
    const std::vector<Triple>& triples() const { return triples_; }

    bool has_triple(const Iri& s, const Iri& p, const Iri& o) const;

    // Direct: objects o of (node, property, o). Inverse: subjects s of
    // (s, property, node). Empty set when the node or property is absent.
    std::set<Iri> neighbors(const Iri& node, const Iri& property, Direction direction) const;

    // Objects of (entity, type_property, .), optionally restricted to IRIs
    // starting with namespace_prefix.
    std::set<Iri> types_of(const Iri& entity, const Iri& type_property,
                           const std::optional<std::string>& namespace_prefix = std::nullopt) const;

    // nullptr when the node has no outgoing (resp. incoming) triples.
    const PropMap* forward(const Iri& node) const;
    const PropMap* inverse(const Iri& node) const;

private:
    std::vector<Triple> triples_; // sorted, unique
    std::unordered_map<Iri, PropMap> forward_;
    std::unordered_map<Iri, PropMap> inverse_;
};

} // namespace revrec::kg
