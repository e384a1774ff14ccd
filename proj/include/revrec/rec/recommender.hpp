#pragma once

#include <map>
#include <set>
#include <string>

#include "revrec/annotation/occurrence.hpp"
#include "revrec/kg/discovery.hpp"
#include "revrec/kg/ldsd.hpp"
#include "revrec/rec/ranking.hpp"

namespace revrec::rec {

struct UserProfile {
    std::string user_id;
    std::set<Iri> liked_items;
    std::set<Iri> rated_items; // superset of liked_items
};

// Read-only data the recommender works from. The distance cache is the only
// mutable member and is safe for concurrent get-or-compute.
struct Stores {
    const annotation::OccurrenceIndex* index = nullptr;
    const kg::DiscoveryStore* discoveries = nullptr; // may be an empty store
    kg::LdsdCache* ldsd = nullptr;                   // required for R3
};

// Full scored candidate list for one seed item (no truncation).
ScoredList score_item(const Iri& initial_item, const RecConfig& config, const Stores& stores);

// Top-n recommendations for one seed item. Unknown items yield an empty list.
ScoredList recommend(const Iri& initial_item, std::size_t top_n, const RecConfig& config,
                     const Stores& stores);

// Sum of the per-seed scores over every liked item; rated items are excluded
// and entities never scored stay out of the list.
std::map<Iri, double> scores_for_user(const UserProfile& profile, const RecConfig& config,
                                      const Stores& stores);

ScoredList recommend_for_user(const UserProfile& profile, std::size_t top_n,
                              const RecConfig& config, const Stores& stores);

} // namespace revrec::rec
