#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revrec/iri.hpp"

namespace revrec::eval {

struct RatingRecord {
    std::string user_id;
    Iri item;
    double rating;
};

using UserItem = std::pair<std::string, Iri>;

// Explicit or implicit feedback on a declared scale. A rating is positive
// when it is strictly greater than positive_threshold.
struct RatingDataset {
    std::vector<RatingRecord> records;
    double max_scale = 5.0;
    double positive_threshold = 3.0;

    // TSV `user_id<TAB>item_iri<TAB>rating`, no header. (user, item) pairs
    // must be unique and ratings must fit the scale.
    static RatingDataset load(const std::filesystem::path& path, double max_scale,
                              double positive_threshold);

    std::vector<Iri> item_universe() const;  // distinct items, sorted
    std::vector<std::string> users() const;  // distinct users, sorted
};

bool is_positive(const RatingDataset& dataset, const RatingRecord& record);

// The positive (user, item) pairs.
std::set<UserItem> binarize(const RatingDataset& dataset);

} // namespace revrec::eval
