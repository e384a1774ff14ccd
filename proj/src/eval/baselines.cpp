#include "revrec/eval/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "revrec/rng.hpp"

namespace revrec::eval {

namespace {

std::vector<Iri> take_unrated(const std::vector<std::pair<Iri, double>>& ranked,
                              const std::set<Iri>& rated, std::size_t n) {
    std::vector<Iri> out;
    for (const auto& [item, score] : ranked) {
        if (rated.count(item)) continue;
        out.push_back(item);
        if (out.size() == n) break;
    }
    return out;
}

const std::set<Iri>& rated_of(const TrainContext& ctx, const std::string& user) {
    static const std::set<Iri> none;
    const auto it = ctx.rated_by_user.find(user);
    return it == ctx.rated_by_user.end() ? none : it->second;
}

class MostPopularModel : public RankingModel {
public:
    explicit MostPopularModel(const TrainContext& ctx) : ctx_(&ctx) {
        std::map<Iri, std::size_t> counts;
        for (const Iri& item : ctx.item_universe) counts[item] = 0;
        for (const auto& [user, item] : ctx.train_positives) ++counts[item];
        for (const auto& [item, count] : counts)
            ranked_.emplace_back(item, static_cast<double>(count));
        std::sort(ranked_.begin(), ranked_.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
    }

    std::vector<Iri> top_n(const std::string& user, std::size_t n) const override {
        return take_unrated(ranked_, rated_of(*ctx_, user), n);
    }

private:
    const TrainContext* ctx_;
    std::vector<std::pair<Iri, double>> ranked_;
};

class RandomModel : public RankingModel {
public:
    explicit RandomModel(const TrainContext& ctx) : ctx_(&ctx) {}

    std::vector<Iri> top_n(const std::string& user, std::size_t n) const override {
        const std::set<Iri>& rated = rated_of(*ctx_, user);
        std::vector<Iri> pool;
        pool.reserve(ctx_->item_universe.size());
        for (const Iri& item : ctx_->item_universe)
            if (!rated.count(item)) pool.push_back(item);
        Rng rng(mix_seed(mix_seed(ctx_->seed, static_cast<std::uint64_t>(ctx_->fold)), fnv1a(user)));
        rng.shuffle(pool);
        if (pool.size() > n)
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end());
        return pool;
    }

private:
    const TrainContext* ctx_;
};

} // namespace

ItemKnnModel::ItemKnnModel(const TrainContext& ctx, std::size_t k) : ctx_(&ctx), k_(k) {
    std::map<Iri, std::set<std::string>> raters;
    for (const RatingRecord* r : ctx.train) raters[r->item].insert(r->user_id);
    items_.assign(ctx.item_universe.begin(), ctx.item_universe.end());
    const std::size_t m = items_.size();
    for (std::size_t i = 0; i < m; ++i) index_[items_[i]] = i;

    similarity_.assign(m * m, 0.0);
    static const std::set<std::string> nobody;
    for (std::size_t i = 0; i < m; ++i) {
        const auto ia = raters.find(items_[i]);
        const std::set<std::string>& a = ia == raters.end() ? nobody : ia->second;
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto ib = raters.find(items_[j]);
            const std::set<std::string>& b = ib == raters.end() ? nobody : ib->second;
            const double sim = item_cosine(a, b);
            similarity_[i * m + j] = sim;
            similarity_[j * m + i] = sim;
        }
    }
}

std::vector<std::pair<Iri, double>> ItemKnnModel::scored(const std::string& user) const {
    const std::set<Iri>& rated = rated_of(*ctx_, user);
    std::vector<std::size_t> rated_ids;
    for (const Iri& item : rated) {
        const auto it = index_.find(item);
        if (it != index_.end()) rated_ids.push_back(it->second);
    }

    std::vector<std::pair<Iri, double>> scored;
    const std::size_t m = items_.size();
    std::vector<double> sims;
    for (std::size_t i = 0; i < m; ++i) {
        if (rated.count(items_[i])) continue;
        sims.clear();
        for (const std::size_t j : rated_ids) sims.push_back(similarity_[i * m + j]);
        // k nearest rated neighbors of item i
        if (sims.size() > k_) {
            std::nth_element(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(k_),
                             sims.end(), std::greater<double>());
            sims.resize(k_);
        }
        double score = 0.0;
        for (const double s : sims) score += s;
        if (score > 0.0) scored.emplace_back(items_[i], score);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return scored;
}

std::vector<Iri> ItemKnnModel::top_n(const std::string& user, std::size_t n) const {
    std::vector<Iri> out;
    for (const auto& [item, score] : scored(user)) {
        out.push_back(item);
        if (out.size() == n) break;
    }
    return out;
}

double item_cosine(const std::set<std::string>& raters_a, const std::set<std::string>& raters_b) {
    if (raters_a.empty() || raters_b.empty()) return 0.0;
    std::size_t shared = 0;
    const std::set<std::string>& small = raters_a.size() <= raters_b.size() ? raters_a : raters_b;
    const std::set<std::string>& big = &small == &raters_a ? raters_b : raters_a;
    for (const std::string& u : small)
        if (big.count(u)) ++shared;
    return static_cast<double>(shared) /
           std::sqrt(static_cast<double>(raters_a.size()) * static_cast<double>(raters_b.size()));
}

std::unique_ptr<RankingModel> MostPopularFactory::train(const TrainContext& ctx) const {
    return std::make_unique<MostPopularModel>(ctx);
}

std::unique_ptr<RankingModel> RandomFactory::train(const TrainContext& ctx) const {
    return std::make_unique<RandomModel>(ctx);
}

std::unique_ptr<RankingModel> ItemKnnFactory::train(const TrainContext& ctx) const {
    return std::make_unique<ItemKnnModel>(ctx, k_);
}

} // namespace revrec::eval
