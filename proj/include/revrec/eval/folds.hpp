#pragma once

#include <cstdint>
#include <map>

#include "revrec/eval/ratings.hpp"

namespace revrec::eval {

// Assignment of every rating record to one of k folds. Derived purely from
// the seed: per user, records are shuffled deterministically and dealt
// round-robin, so each user's ratings spread across folds as evenly as their
// count allows.
struct FoldPlan {
    int k = 5;
    std::map<UserItem, int> assignment;

    int fold_of(const std::string& user, const Iri& item) const;
};

FoldPlan split_folds(const RatingDataset& dataset, int k, std::uint64_t seed);

} // namespace revrec::eval
