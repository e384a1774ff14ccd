#include "revrec/eval/folds.hpp"

#include <algorithm>

#include "revrec/errors.hpp"
#include "revrec/rng.hpp"

namespace revrec::eval {

int FoldPlan::fold_of(const std::string& user, const Iri& item) const {
    const auto it = assignment.find({user, item});
    if (it == assignment.end())
        throw ValidationError("no fold assignment for (" + user + ", " + item.str() + ")");
    return it->second;
}

FoldPlan split_folds(const RatingDataset& dataset, int k, std::uint64_t seed) {
    if (k < 2) throw ValidationError("fold count must be at least 2");

    std::map<std::string, std::vector<Iri>> per_user;
    for (const RatingRecord& r : dataset.records) per_user[r.user_id].push_back(r.item);

    FoldPlan plan;
    plan.k = k;
    for (auto& [user, items] : per_user) {
        std::sort(items.begin(), items.end());
        Rng rng(mix_seed(seed, fnv1a(user)));
        rng.shuffle(items);
        for (std::size_t i = 0; i < items.size(); ++i)
            plan.assignment[{user, items[i]}] = static_cast<int>(i % static_cast<std::size_t>(k));
    }
    return plan;
}

} // namespace revrec::eval
