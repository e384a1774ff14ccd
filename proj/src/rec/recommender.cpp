#include "revrec/rec/recommender.hpp"

#include <algorithm>

#include "revrec/errors.hpp"
#include "revrec/rec/candidates.hpp"

namespace revrec::rec {

namespace {

const kg::DiscoveryStore& discoveries_or_empty(const Stores& stores) {
    static const kg::DiscoveryStore empty;
    return stores.discoveries ? *stores.discoveries : empty;
}

} // namespace

ScoredList score_item(const Iri& initial_item, const RecConfig& config, const Stores& stores) {
    if (!stores.index) throw ConfigError("recommender needs an occurrence index");
    const std::vector<Candidate> candidates =
        generate_candidates(initial_item, *stores.index, discoveries_or_empty(stores), config);
    return rank(candidates, initial_item, config, stores.ldsd);
}

ScoredList recommend(const Iri& initial_item, std::size_t top_n, const RecConfig& config,
                     const Stores& stores) {
    ScoredList list = score_item(initial_item, config, stores);
    if (list.entries.size() > top_n)
        list.entries.erase(list.entries.begin() + static_cast<std::ptrdiff_t>(top_n),
                           list.entries.end());
    return list;
}

std::map<Iri, double> scores_for_user(const UserProfile& profile, const RecConfig& config,
                                      const Stores& stores) {
    std::map<Iri, double> scores;
    for (const Iri& seed : profile.liked_items) {
        const ScoredList list = score_item(seed, config, stores);
        for (const ScoredEntry& entry : list.entries) scores[entry.entity] += entry.score;
    }
    for (const Iri& rated : profile.rated_items) scores.erase(rated);
    return scores;
}

ScoredList recommend_for_user(const UserProfile& profile, std::size_t top_n,
                              const RecConfig& config, const Stores& stores) {
    ScoredList list{profile.user_id, {}};
    if (profile.liked_items.empty()) return list;
    for (const auto& [entity, score] : scores_for_user(profile, config, stores))
        list.entries.push_back(ScoredEntry{entity, score});
    sort_entries(list.entries);
    if (list.entries.size() > top_n)
        list.entries.erase(list.entries.begin() + static_cast<std::ptrdiff_t>(top_n),
                           list.entries.end());
    return list;
}

} // namespace revrec::rec
