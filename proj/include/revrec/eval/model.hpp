#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "revrec/eval/folds.hpp"
#include "revrec/eval/ratings.hpp"

namespace revrec::eval {

// Everything a model may learn from for one fold. Test-side records are not
// reachable from here.
struct TrainContext {
    const RatingDataset* dataset = nullptr;
    int fold = 0;
    std::uint64_t seed = 0;
    std::vector<const RatingRecord*> train;
    std::set<UserItem> train_positives;
    std::map<std::string, std::set<Iri>> rated_by_user; // train-side
    std::map<std::string, std::set<Iri>> liked_by_user; // train-side positives
    std::vector<Iri> item_universe;                     // whole dataset, sorted
};

// A trained recommender: ranks items for a user with the user's train-side
// rated items already excluded. Must be deterministic and safe to call
// concurrently for distinct users.
class RankingModel {
public:
    virtual ~RankingModel() = default;
    virtual std::vector<Iri> top_n(const std::string& user, std::size_t n) const = 0;
};

class ModelFactory {
public:
    virtual ~ModelFactory() = default;
    virtual std::string name() const = 0;
    virtual std::unique_ptr<RankingModel> train(const TrainContext& ctx) const = 0;
};

TrainContext make_train_context(const RatingDataset& dataset, const FoldPlan& plan, int fold,
                                std::uint64_t seed);

} // namespace revrec::eval
