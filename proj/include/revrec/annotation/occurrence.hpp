#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "revrec/annotation/annotator.hpp"
#include "revrec/annotation/review.hpp"
#include "revrec/iri.hpp"

namespace revrec::annotation {

// (entity, item) -> number of distinct reviews of the item mentioning the
// entity. Counts are review-level: several mentions inside one review count
// once. Immutable after construction.
class OccurrenceIndex {
public:
    OccurrenceIndex() = default;

    static OccurrenceIndex build(const std::vector<Review>& reviews,
                                 const std::vector<Mention>& mentions);

    // TSV `entity_iri<TAB>item_iri<TAB>count`, sorted by item then entity.
    static OccurrenceIndex load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    int count(const Iri& entity, const Iri& item) const; // 0 when absent
    int item_max(const Iri& item) const;                 // 0 when absent

    // entity -> count for one item; nullptr when the item has no entities.
    const std::map<Iri, int>* entities_of(const Iri& item) const;
    // item -> count for one entity; nullptr when never annotated.
    const std::map<Iri, int>* items_mentioning(const Iri& entity) const;

    const std::map<Iri, std::map<Iri, int>>& by_item() const { return by_item_; }
    std::vector<Iri> distinct_entities() const;
    std::size_t pair_count() const;
    long long total_occurrences() const;

private:
    void add(const Iri& entity, const Iri& item, int count);

    std::map<Iri, std::map<Iri, int>> by_item_;   // item -> entity -> count
    std::map<Iri, std::map<Iri, int>> by_entity_; // entity -> item -> count
    std::map<Iri, int> item_max_;
};

} // namespace revrec::annotation
