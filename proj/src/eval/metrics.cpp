#include "revrec/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace revrec::eval {

FeatureTable features_from_index(const annotation::OccurrenceIndex& index) {
    FeatureTable table;
    for (const auto& [item, entities] : index.by_item()) {
        std::set<Iri>& features = table[item];
        for (const auto& [entity, count] : entities) features.insert(entity);
    }
    return table;
}

std::size_t hit_count(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n) {
    std::size_t hits = 0;
    const std::size_t len = std::min(n, list.size());
    for (std::size_t i = 0; i < len; ++i)
        if (relevant.count(list[i])) ++hits;
    return hits;
}

double precision_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n) {
    if (n == 0) return 0.0;
    return static_cast<double>(hit_count(list, relevant, n)) / static_cast<double>(n);
}

double recall_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n) {
    if (relevant.empty()) return 0.0;
    return static_cast<double>(hit_count(list, relevant, n)) / static_cast<double>(relevant.size());
}

double ndcg_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n) {
    if (relevant.empty()) return 0.0;
    double dcg = 0.0;
    const std::size_t len = std::min(n, list.size());
    for (std::size_t i = 0; i < len; ++i)
        if (relevant.count(list[i])) dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    const std::size_t ideal_hits = std::min(relevant.size(), n);
    double idcg = 0.0;
    for (std::size_t i = 0; i < ideal_hits; ++i)
        idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    return idcg == 0.0 ? 0.0 : dcg / idcg;
}

double ebn(const std::vector<Iri>& list, const PopularityTable& popularity) {
    double sum = 0.0;
    for (const Iri& item : list) {
        const auto it = popularity.find(item);
        const double p = it == popularity.end() ? 0.0 : it->second;
        if (p > 0.0) sum -= p * std::log2(p);
    }
    return sum;
}

double ild_diversity(const std::vector<Iri>& list, const FeatureTable& features) {
    if (list.size() < 2) return 0.0;
    static const std::set<Iri> no_features;
    std::vector<const std::set<Iri>*> vecs;
    vecs.reserve(list.size());
    for (const Iri& item : list) {
        const auto it = features.find(item);
        vecs.push_back(it == features.end() ? &no_features : &it->second);
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            const std::set<Iri>& a = *vecs[i];
            const std::set<Iri>& b = *vecs[j];
            double cosine = 0.0;
            if (!a.empty() && !b.empty()) {
                std::size_t shared = 0;
                const std::set<Iri>& small = a.size() <= b.size() ? a : b;
                const std::set<Iri>& big = &small == &a ? b : a;
                for (const Iri& f : small)
                    if (big.count(f)) ++shared;
                cosine = static_cast<double>(shared) /
                         std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
            }
            sum += 1.0 - cosine;
        }
    }
    const double pairs = static_cast<double>(list.size()) * static_cast<double>(list.size() - 1) / 2.0;
    return sum / pairs;
}

} // namespace revrec::eval
