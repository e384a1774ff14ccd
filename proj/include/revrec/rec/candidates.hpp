#pragma once

#include <optional>
#include <vector>

#include "revrec/annotation/occurrence.hpp"
#include "revrec/iri.hpp"
#include "revrec/kg/discovery.hpp"
#include "revrec/rec/config.hpp"

namespace revrec::rec {

enum class Origin { Annotated, Discovered };

// An entity eligible for ranking against one seed item. For discovered
// entities the occurrence of the entity that anchors them to the seed item's
// reviews is stored, and distances come from the discovery records.
struct Candidate {
    Iri entity;
    Origin origin = Origin::Annotated;
    int occurrence = 0;                   // >= 1 once generation finishes
    std::optional<Iri> source;            // set iff Discovered
    std::optional<double> ldsd_to_source; // in [0,1] when known
};

// Review-evidence count linking an entity to a seed item: reviews of the seed
// item mentioning the entity plus reviews of the entity mentioning the seed.
int occur(const Iri& entity, const Iri& initial_item,
          const annotation::OccurrenceIndex& index);

// Candidate set for one seed item, sorted by entity IRI:
//  (a) entities annotated in the seed item's reviews,
//  (b) items whose reviews mention the seed item,
//  (c) with use_discovered: entities discovered through the seed item, the
//      sources that discovered the seed item, and entities discovered through
//      the class-(a) entities.
// The seed item itself never appears. Entities qualifying through both review
// evidence and discovery stay Annotated. Candidates below
// ceil(threshold * max occurrence of the seed item's entities) are cut.
std::vector<Candidate> generate_candidates(const Iri& initial_item,
                                           const annotation::OccurrenceIndex& index,
                                           const kg::DiscoveryStore& discoveries,
                                           const RecConfig& config);

// The inclusive cutoff applied by generate_candidates.
int occurrence_cutoff(double threshold, int item_max_occurrence);

} // namespace revrec::rec
