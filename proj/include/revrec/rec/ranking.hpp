#pragma once

#include <string>
#include <vector>

#include "revrec/kg/ldsd.hpp"
#include "revrec/rec/candidates.hpp"
#include "revrec/rec/config.hpp"

namespace revrec::rec {

struct ScoredEntry {
    Iri entity;
    double score;
};

// Entries sorted by score descending, entity IRI ascending on ties. The
// subject is the seed item IRI or the user id the list was generated for.
struct ScoredList {
    std::string subject;
    std::vector<ScoredEntry> entries;
};

// occurrence-only ranking: alpha_i * occurrence_i / max occurrence in the set
ScoredList rank_r1(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config);

// adds the distance between a discovered entity and the entity it came from:
// annotated entities keep their R1 score, discovered ones get
// 0.5 * R1 + 0.5 * (1 - distance-to-source)
ScoredList rank_r2(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config);

// blends R2 with the distance to the seed item itself:
// eta * R2 + kappa * (1 - distance-to-seed), distances computed on demand
ScoredList rank_r3(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config, kg::LdsdCache& ldsd);

// dispatch on config.ranking; R3 requires a cache
ScoredList rank(const std::vector<Candidate>& candidates, const Iri& initial_item,
                const RecConfig& config, kg::LdsdCache* ldsd);

void sort_entries(std::vector<ScoredEntry>& entries);

} // namespace revrec::rec
