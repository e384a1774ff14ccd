#include "revrec/eval/rec_model.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace revrec::eval {

namespace {

class RecommenderModel : public RankingModel {
public:
    RecommenderModel(const TrainContext& ctx, const rec::RecConfig& config,
                     const rec::Stores& stores)
        : ctx_(&ctx) {
        universe_.insert(ctx.item_universe.begin(), ctx.item_universe.end());

        // Seed lists depend only on the stores, not on the fold, but scoring
        // every possible seed up front keeps the per-user phase read-only.
        std::set<Iri> seeds;
        for (const auto& [user, liked] : ctx.liked_by_user) seeds.insert(liked.begin(), liked.end());
        const std::vector<Iri> seed_list(seeds.begin(), seeds.end());
        std::vector<std::map<Iri, double>> scored(seed_list.size());
        const std::int64_t n = static_cast<std::int64_t>(seed_list.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < n; ++i) {
            const rec::ScoredList list = rec::score_item(seed_list[i], config, stores);
            std::map<Iri, double>& target = scored[static_cast<std::size_t>(i)];
            for (const rec::ScoredEntry& entry : list.entries) {
                if (!universe_.count(entry.entity)) continue; // rank items only
                target.emplace(entry.entity, entry.score);
            }
        }
        for (std::size_t i = 0; i < seed_list.size(); ++i)
            seed_scores_.emplace(seed_list[i], std::move(scored[i]));
    }

    std::vector<Iri> top_n(const std::string& user, std::size_t n) const override {
        static const std::set<Iri> none;
        const auto liked_it = ctx_->liked_by_user.find(user);
        const std::set<Iri>& liked = liked_it == ctx_->liked_by_user.end() ? none : liked_it->second;
        const auto rated_it = ctx_->rated_by_user.find(user);
        const std::set<Iri>& rated = rated_it == ctx_->rated_by_user.end() ? none : rated_it->second;

        std::map<Iri, double> totals;
        for (const Iri& seed : liked) {
            const auto it = seed_scores_.find(seed);
            if (it == seed_scores_.end()) continue;
            for (const auto& [item, score] : it->second)
                if (!rated.count(item)) totals[item] += score;
        }
        std::vector<std::pair<Iri, double>> ranked(totals.begin(), totals.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        std::vector<Iri> out;
        for (const auto& [item, score] : ranked) {
            out.push_back(item);
            if (out.size() == n) break;
        }
        return out;
    }

private:
    const TrainContext* ctx_;
    std::set<Iri> universe_;
    std::map<Iri, std::map<Iri, double>> seed_scores_;
};

} // namespace

std::unique_ptr<RankingModel> RecommenderFactory::train(const TrainContext& ctx) const {
    return std::make_unique<RecommenderModel>(ctx, config_, stores_);
}

} // namespace revrec::eval
