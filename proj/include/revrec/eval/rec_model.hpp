#pragma once

#include "revrec/eval/model.hpp"
#include "revrec/rec/recommender.hpp"

namespace revrec::eval {

// Review-based recommender under the all-unrated-items protocol: per-seed
// scored lists are summed over the user's liked training items, restricted to
// the rating dataset's item universe, and the user's rated items are dropped.
// Items the recommender never scores stay out of the list.
class RecommenderFactory : public ModelFactory {
public:
    RecommenderFactory(rec::RecConfig config, rec::Stores stores)
        : config_(std::move(config)), stores_(stores) {
        config_.validate();
    }

    std::string name() const override { return config_.name; }
    std::unique_ptr<RankingModel> train(const TrainContext& ctx) const override;

    const rec::RecConfig& config() const { return config_; }

private:
    rec::RecConfig config_;
    rec::Stores stores_;
};

} // namespace revrec::eval
