#include "revrec/annotation/occurrence.hpp"

#include <set>
#include <unordered_map>

#include "revrec/errors.hpp"
#include "revrec/tsv.hpp"

namespace revrec::annotation {

void OccurrenceIndex::add(const Iri& entity, const Iri& item, int count) {
    by_item_[item][entity] = count;
    by_entity_[entity][item] = count;
    int& max = item_max_.try_emplace(item, 0).first->second;
    if (count > max) max = count;
}

OccurrenceIndex OccurrenceIndex::build(const std::vector<Review>& reviews,
                                       const std::vector<Mention>& mentions) {
    std::unordered_map<std::string, const Iri*> item_of_review;
    for (const Review& review : reviews) item_of_review.emplace(review.review_id, &review.item);

    // distinct (entity, review) pairs, then counted per (entity, item)
    std::set<std::pair<Iri, std::string>> seen;
    std::map<std::pair<Iri, Iri>, int> counts;
    for (const Mention& mention : mentions) {
        const auto it = item_of_review.find(mention.review_id);
        if (it == item_of_review.end())
            throw ValidationError("mention references unknown review_id '" + mention.review_id + "'");
        if (!seen.emplace(mention.entity, mention.review_id).second) continue;
        ++counts[{mention.entity, *it->second}];
    }

    OccurrenceIndex index;
    for (const auto& [key, count] : counts) index.add(key.first, key.second, count);
    return index;
}

OccurrenceIndex OccurrenceIndex::load(const std::filesystem::path& path) {
    OccurrenceIndex index;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw ParseError(path.string(), line_no, "expected 3 tab-separated fields");
        int count = 0;
        try {
            count = std::stoi(fields[2]);
        } catch (const std::exception&) {
            throw ParseError(path.string(), line_no, "bad count '" + fields[2] + "'");
        }
        if (count < 1) throw ParseError(path.string(), line_no, "count must be >= 1");
        try {
            index.add(Iri(fields[0]), Iri(fields[1]), count);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return index;
}

void OccurrenceIndex::save(const std::filesystem::path& path) const {
    AtomicWriter writer(path);
    for (const auto& [item, entities] : by_item_)
        for (const auto& [entity, count] : entities)
            writer.stream() << entity.str() << '\t' << item.str() << '\t' << count << '\n';
    writer.commit();
}

int OccurrenceIndex::count(const Iri& entity, const Iri& item) const {
    const auto it = by_item_.find(item);
    if (it == by_item_.end()) return 0;
    const auto eit = it->second.find(entity);
    return eit == it->second.end() ? 0 : eit->second;
}

int OccurrenceIndex::item_max(const Iri& item) const {
    const auto it = item_max_.find(item);
    return it == item_max_.end() ? 0 : it->second;
}

const std::map<Iri, int>* OccurrenceIndex::entities_of(const Iri& item) const {
    const auto it = by_item_.find(item);
    return it == by_item_.end() ? nullptr : &it->second;
}

const std::map<Iri, int>* OccurrenceIndex::items_mentioning(const Iri& entity) const {
    const auto it = by_entity_.find(entity);
    return it == by_entity_.end() ? nullptr : &it->second;
}

std::vector<Iri> OccurrenceIndex::distinct_entities() const {
    std::vector<Iri> out;
    out.reserve(by_entity_.size());
    for (const auto& [entity, items] : by_entity_) out.push_back(entity);
    return out;
}

std::size_t OccurrenceIndex::pair_count() const {
    std::size_t n = 0;
    for (const auto& [item, entities] : by_item_) n += entities.size();
    return n;
}

long long OccurrenceIndex::total_occurrences() const {
    long long total = 0;
    for (const auto& [item, entities] : by_item_)
        for (const auto& [entity, count] : entities) total += count;
    return total;
}

} // namespace revrec::annotation
