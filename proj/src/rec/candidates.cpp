#include "revrec/rec/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace revrec::rec {

int occur(const Iri& entity, const Iri& initial_item,
          const annotation::OccurrenceIndex& index) {
    return index.count(entity, initial_item) + index.count(initial_item, entity);
}

int occurrence_cutoff(double threshold, int item_max_occurrence) {
    // the 1e-9 slack keeps e.g. 0.05 * 40 from ceiling to 3
    return static_cast<int>(std::ceil(threshold * item_max_occurrence - 1e-9));
}

namespace {

// ordering of discovery paths for one discovered entity: closest distance
// wins, missing distances lose to known ones, source IRI breaks ties
bool path_precedes(const Candidate& a, const Candidate& b) {
    const double da = a.ldsd_to_source.value_or(std::numeric_limits<double>::infinity());
    const double db = b.ldsd_to_source.value_or(std::numeric_limits<double>::infinity());
    if (da != db) return da < db;
    return a.source < b.source;
}

} // namespace

std::vector<Candidate> generate_candidates(const Iri& initial_item,
                                           const annotation::OccurrenceIndex& index,
                                           const kg::DiscoveryStore& discoveries,
                                           const RecConfig& config) {
    std::map<Iri, Candidate> annotated;

    // (a) entities annotated in the seed item's reviews
    if (const auto* entities = index.entities_of(initial_item)) {
        for (const auto& [entity, count] : *entities) {
            if (entity == initial_item) continue;
            annotated.emplace(entity, Candidate{entity, Origin::Annotated,
                                                occur(entity, initial_item, index),
                                                std::nullopt, std::nullopt});
        }
    }
    // (b) items whose reviews mention the seed item
    if (const auto* items = index.items_mentioning(initial_item)) {
        for (const auto& [item, count] : *items) {
            if (item == initial_item) continue;
            annotated.emplace(item, Candidate{item, Origin::Annotated,
                                              occur(item, initial_item, index),
                                              std::nullopt, std::nullopt});
        }
    }

    std::map<Iri, Candidate> discovered;
    if (config.use_discovered) {
        const auto consider = [&](const Iri& entity, const Iri& source,
                                  std::optional<double> distance, int occurrence) {
            if (entity == initial_item || occurrence < 1) return;
            if (annotated.count(entity)) return; // review evidence wins
            Candidate candidate{entity, Origin::Discovered, occurrence, source, distance};
            const auto it = discovered.find(entity);
            if (it == discovered.end())
                discovered.emplace(entity, std::move(candidate));
            else if (path_precedes(candidate, it->second))
                it->second = std::move(candidate);
        };

        const int self_occurrence = occur(initial_item, initial_item, index);
        // entities discovered through the seed item itself
        for (const auto* record : discoveries.by_source(initial_item))
            consider(record->discovered, initial_item, record->ldsd, self_occurrence);
        // sources through which the seed item was discovered (symmetric case)
        for (const auto* record : discoveries.by_discovered(initial_item))
            consider(record->source, initial_item, record->ldsd, self_occurrence);
        // entities discovered through the seed item's annotated entities
        for (const auto& [entity, candidate] : annotated) {
            if (index.count(entity, initial_item) < 1) continue; // class (a) only
            for (const auto* record : discoveries.by_source(entity))
                consider(record->discovered, entity, record->ldsd, candidate.occurrence);
        }
    }

    const int cutoff = occurrence_cutoff(config.occurrence_threshold, index.item_max(initial_item));
    std::vector<Candidate> result;
    result.reserve(annotated.size() + discovered.size());
    for (auto& [entity, candidate] : annotated)
        if (candidate.occurrence >= cutoff && candidate.occurrence >= 1)
            result.push_back(std::move(candidate));
    for (auto& [entity, candidate] : discovered)
        if (candidate.occurrence >= cutoff) result.push_back(std::move(candidate));
    std::sort(result.begin(), result.end(),
              [](const Candidate& a, const Candidate& b) { return a.entity < b.entity; });
    return result;
}

} // namespace revrec::rec
