#include "revrec/eval/ratings.hpp"

#include <algorithm>

#include "revrec/errors.hpp"
#include "revrec/tsv.hpp"

namespace revrec::eval {

RatingDataset RatingDataset::load(const std::filesystem::path& path, double max_scale,
                                  double positive_threshold) {
    RatingDataset dataset;
    dataset.max_scale = max_scale;
    dataset.positive_threshold = positive_threshold;

    std::set<UserItem> seen;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw ParseError(path.string(), line_no, "expected 3 tab-separated fields");
        double rating = 0;
        try {
            rating = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw ParseError(path.string(), line_no, "bad rating '" + fields[2] + "'");
        }
        try {
            RatingRecord record{fields[0], Iri(fields[1]), rating};
            if (record.rating < 0 || record.rating > max_scale)
                throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                      ": rating outside the declared scale");
            if (!seen.emplace(record.user_id, record.item).second)
                throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                      ": duplicate (user, item) pair");
            dataset.records.push_back(std::move(record));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return dataset;
}

std::vector<Iri> RatingDataset::item_universe() const {
    std::set<Iri> items;
    for (const RatingRecord& r : records) items.insert(r.item);
    return {items.begin(), items.end()};
}

std::vector<std::string> RatingDataset::users() const {
    std::set<std::string> users;
    for (const RatingRecord& r : records) users.insert(r.user_id);
    return {users.begin(), users.end()};
}

bool is_positive(const RatingDataset& dataset, const RatingRecord& record) {
    return record.rating > dataset.positive_threshold;
}

std::set<UserItem> binarize(const RatingDataset& dataset) {
    std::set<UserItem> positives;
    for (const RatingRecord& r : dataset.records)
        if (is_positive(dataset, r)) positives.emplace(r.user_id, r.item);
    return positives;
}

} // namespace revrec::eval
