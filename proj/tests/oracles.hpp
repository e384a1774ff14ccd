#pragma once

// Independent brute-force oracles. Everything here works straight off raw
// triple lists and candidate vectors, bypassing the indexes and score code
// they are used to check.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revrec/kg/graph.hpp"
#include "revrec/rec/candidates.hpp"
#include "revrec/rec/config.hpp"
#include "revrec/rng.hpp"

namespace testutil {

// Counts the four link classes by scanning the triple list directly.
inline double ldsd_brute_force(const std::vector<revrec::kg::Triple>& triples,
                               const revrec::Iri& a, const revrec::Iri& b) {
    using revrec::Iri;
    std::size_t direct = 0;
    for (const auto& t : triples) {
        if (t.subject == a && t.object == b) ++direct;
        if (t.subject == b && t.object == a) ++direct;
    }
    std::set<std::pair<Iri, Iri>> indirect_in; // (property, shared subject)
    std::set<std::pair<Iri, Iri>> indirect_out; // (property, shared object)
    for (const auto& t1 : triples) {
        for (const auto& t2 : triples) {
            if (t1.property != t2.property) continue;
            if (t1.object == a && t2.object == b && t1.subject == t2.subject)
                indirect_in.emplace(t1.property, t1.subject);
            if (t1.subject == a && t2.subject == b && t1.object == t2.object)
                indirect_out.emplace(t1.property, t1.object);
        }
    }
    return 1.0 / (1.0 + static_cast<double>(direct + indirect_in.size() + indirect_out.size()));
}

// Uniform random graph over small node/property alphabets.
inline std::vector<revrec::kg::Triple> random_triples(revrec::Rng& rng, std::size_t max_triples,
                                                      std::size_t nodes = 8,
                                                      std::size_t properties = 3) {
    const auto node = [](std::uint64_t i) {
        return revrec::Iri("http://t.example.org/n" + std::to_string(i));
    };
    const auto prop = [](std::uint64_t i) {
        return revrec::Iri("http://t.example.org/p" + std::to_string(i));
    };
    std::vector<revrec::kg::Triple> triples;
    const std::size_t n = rng.below(max_triples + 1);
    for (std::size_t i = 0; i < n; ++i)
        triples.push_back(revrec::kg::Triple{node(rng.below(nodes)), prop(rng.below(properties)),
                                             node(rng.below(nodes))});
    return triples;
}

// Direct evaluation of the three ranking formulas over a candidate vector.
// distance_to_seed supplies LDSD(entity, seed) for the third ranker.
struct BruteScores {
    std::map<revrec::Iri, double> r1;
    std::map<revrec::Iri, double> r2;
    std::map<revrec::Iri, double> r3;
};

inline BruteScores rank_brute_force(
    const std::vector<revrec::rec::Candidate>& candidates, const revrec::rec::RecConfig& config,
    const std::map<revrec::Iri, double>& distance_to_seed) {
    using revrec::rec::Origin;
    BruteScores scores;
    if (candidates.empty()) return scores;
    int max_occ = 0;
    for (const auto& c : candidates) max_occ = std::max(max_occ, c.occurrence);
    for (const auto& c : candidates) {
        const double alpha = c.origin == Origin::Annotated ? 1.0 : config.alpha;
        const double r1 = alpha * c.occurrence / static_cast<double>(max_occ);
        const double beta = c.origin == Origin::Annotated ? 1.0 : 0.5;
        const double gamma = c.origin == Origin::Annotated ? 0.0 : 0.5;
        const double r2 = beta * r1 + gamma * (1.0 - c.ldsd_to_source.value_or(0.0));
        scores.r1[c.entity] = r1;
        scores.r2[c.entity] = r2;
        if (config.eta && config.kappa)
            scores.r3[c.entity] = *config.eta * r2 +
                                  *config.kappa * (1.0 - distance_to_seed.at(c.entity));
    }
    return scores;
}

// Expected order of a score map under the global tie rule.
inline std::vector<revrec::Iri> order_brute_force(const std::map<revrec::Iri, double>& scores) {
    std::vector<std::pair<revrec::Iri, double>> items(scores.begin(), scores.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<revrec::Iri> order;
    order.reserve(items.size());
    for (const auto& [iri, score] : items) order.push_back(iri);
    return order;
}

} // namespace testutil
