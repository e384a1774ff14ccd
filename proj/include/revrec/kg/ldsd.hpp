#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revrec/kg/graph.hpp"

namespace revrec::kg {

// Linked Data Semantic Distance between two distinct resources:
//
//   1 / (1 + Cd(a,b) + Cd(b,a) + Cii(a,b) + Cio(a,b))
//
// Cd(a,b)  = number of properties p with (a,p,b)
// Cii(a,b) = number of pairs (p,s) with (s,p,a) and (s,p,b)
// Cio(a,b) = number of pairs (p,o) with (a,p,o) and (b,p,o)
//
// Symmetric, in (0,1]; exactly 1 when the resources share no link at all.
// Throws std::invalid_argument when a == b.
double ldsd(const Graph& graph, const Iri& a, const Iri& b);

// Get-or-compute cache keyed on the unordered pair. Distances are pure
// functions of the graph, so concurrent callers racing on the same pair
// simply store the same value.
class LdsdCache {
public:
    explicit LdsdCache(const Graph& graph) : graph_(&graph) {}

    double get(const Iri& a, const Iri& b);
    std::size_t size() const;

private:
    const Graph* graph_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, double> memo_; // key: min\x1Fmax of the pair
};

// Distance for each pair, in input order. The parallel kernel splits the pair
// list across threads; the serial version is the reference used by tests and
// the benchmark.
std::vector<double> ldsd_batch(const Graph& graph, const std::vector<std::pair<Iri, Iri>>& pairs);
std::vector<double> ldsd_batch_serial(const Graph& graph,
                                      const std::vector<std::pair<Iri, Iri>>& pairs);

} // namespace revrec::kg
