#pragma once

#include "revrec/eval/model.hpp"

namespace revrec::eval {

// Ranks every item by the number of positive training ratings it received;
// every user sees the same order minus their own rated items.
class MostPopularFactory : public ModelFactory {
public:
    std::string name() const override { return "popular"; }
    std::unique_ptr<RankingModel> train(const TrainContext& ctx) const override;
};

// Uniform random permutation of the user's unrated items, derived purely from
// (seed, fold, user) so results do not depend on evaluation order.
class RandomFactory : public ModelFactory {
public:
    std::string name() const override { return "random"; }
    std::unique_ptr<RankingModel> train(const TrainContext& ctx) const override;
};

// Item-based collaborative filtering over the binary user-item matrix:
// score(u, i) sums the cosine similarity of i to the k most similar items u
// rated.
class ItemKnnModel : public RankingModel {
public:
    ItemKnnModel(const TrainContext& ctx, std::size_t k);

    std::vector<Iri> top_n(const std::string& user, std::size_t n) const override;
    // every positively scored unrated item, ranked; exposed for verification
    std::vector<std::pair<Iri, double>> scored(const std::string& user) const;

private:
    const TrainContext* ctx_;
    std::size_t k_;
    std::vector<Iri> items_;
    std::map<Iri, std::size_t> index_;
    std::vector<double> similarity_; // m x m, symmetric, zero diagonal
};

class ItemKnnFactory : public ModelFactory {
public:
    explicit ItemKnnFactory(std::size_t k = 80) : k_(k) {}
    std::string name() const override { return "knn"; }
    std::unique_ptr<RankingModel> train(const TrainContext& ctx) const override;

private:
    std::size_t k_;
};

// cosine between the rater sets of two items; exposed for tests
double item_cosine(const std::set<std::string>& raters_a, const std::set<std::string>& raters_b);

} // namespace revrec::eval
