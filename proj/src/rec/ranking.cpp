#include "revrec/rec/ranking.hpp"

#include <algorithm>

#include "revrec/errors.hpp"

namespace revrec::rec {

void sort_entries(std::vector<ScoredEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const ScoredEntry& a, const ScoredEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.entity < b.entity;
    });
}

namespace {

int max_occurrence(const std::vector<Candidate>& candidates) {
    int max = 0;
    for (const Candidate& c : candidates) max = std::max(max, c.occurrence);
    return max;
}

double r1_score(const Candidate& c, int max_occ, const RecConfig& config) {
    const double alpha = c.origin == Origin::Annotated ? 1.0 : config.alpha;
    return alpha * static_cast<double>(c.occurrence) / static_cast<double>(max_occ);
}

double r2_score(const Candidate& c, int max_occ, const RecConfig& config) {
    const double r1 = r1_score(c, max_occ, config);
    if (c.origin == Origin::Annotated) return r1; // beta = 1, gamma = 0
    if (!c.ldsd_to_source)
        throw ConfigError("discovered candidate " + c.entity.str() +
                          " has no precomputed distance to its source; rerun discovery with "
                          "distances enabled");
    return 0.5 * r1 + 0.5 * (1.0 - *c.ldsd_to_source);
}

} // namespace

ScoredList rank_r1(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config) {
    ScoredList list{initial_item.str(), {}};
    if (candidates.empty()) return list;
    const int max_occ = max_occurrence(candidates);
    list.entries.reserve(candidates.size());
    for (const Candidate& c : candidates)
        list.entries.push_back(ScoredEntry{c.entity, r1_score(c, max_occ, config)});
    sort_entries(list.entries);
    return list;
}

ScoredList rank_r2(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config) {
    ScoredList list{initial_item.str(), {}};
    if (candidates.empty()) return list;
    const int max_occ = max_occurrence(candidates);
    list.entries.reserve(candidates.size());
    for (const Candidate& c : candidates)
        list.entries.push_back(ScoredEntry{c.entity, r2_score(c, max_occ, config)});
    sort_entries(list.entries);
    return list;
}

ScoredList rank_r3(const std::vector<Candidate>& candidates, const Iri& initial_item,
                   const RecConfig& config, kg::LdsdCache& ldsd) {
    if (!config.eta || !config.kappa)
        throw ConfigError(config.name + ": R3 requires eta and kappa");
    ScoredList list{initial_item.str(), {}};
    if (candidates.empty()) return list;
    const int max_occ = max_occurrence(candidates);
    list.entries.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        const double r2 = r2_score(c, max_occ, config);
        const double distance = ldsd.get(c.entity, initial_item);
        list.entries.push_back(ScoredEntry{c.entity, *config.eta * r2 + *config.kappa * (1.0 - distance)});
    }
    sort_entries(list.entries);
    return list;
}

ScoredList rank(const std::vector<Candidate>& candidates, const Iri& initial_item,
                const RecConfig& config, kg::LdsdCache* ldsd) {
    switch (config.ranking) {
        case Ranking::R1: return rank_r1(candidates, initial_item, config);
        case Ranking::R2: return rank_r2(candidates, initial_item, config);
        case Ranking::R3:
            if (!ldsd)
                throw ConfigError(config.name + ": R3 needs the knowledge graph for distances");
            return rank_r3(candidates, initial_item, config, *ldsd);
    }
    throw ConfigError("unreachable ranking value");
}

} // namespace revrec::rec
