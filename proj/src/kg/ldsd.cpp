#include "revrec/kg/ldsd.hpp"

#include <algorithm>
#include <stdexcept>

namespace revrec::kg {

namespace {

std::size_t count_direct(const Graph& g, const Iri& from, const Iri& to) {
    std::size_t n = 0;
    const Graph::PropMap* out = g.forward(from);
    if (!out) return 0;
    for (const auto& [property, objects] : *out)
        if (objects.count(to)) ++n;
    return n;
}

std::size_t count_shared(const Graph::PropMap* lhs, const Graph::PropMap* rhs) {
    if (!lhs || !rhs) return 0;
    std::size_t n = 0;
    for (const auto& [property, left_nodes] : *lhs) {
        const auto it = rhs->find(property);
        if (it == rhs->end()) continue;
        const std::set<Iri>& right_nodes = it->second;
        // count the intersection, iterating the smaller side
        const std::set<Iri>& small = left_nodes.size() <= right_nodes.size() ? left_nodes : right_nodes;
        const std::set<Iri>& big = &small == &left_nodes ? right_nodes : left_nodes;
        for (const Iri& node : small)
            if (big.count(node)) ++n;
    }
    return n;
}

} // namespace

double ldsd(const Graph& graph, const Iri& a, const Iri& b) {
    if (a == b) throw std::invalid_argument("LDSD is undefined for a resource and itself");
    const std::size_t direct = count_direct(graph, a, b) + count_direct(graph, b, a);
    const std::size_t indirect_in = count_shared(graph.inverse(a), graph.inverse(b));
    const std::size_t indirect_out = count_shared(graph.forward(a), graph.forward(b));
    return 1.0 / (1.0 + static_cast<double>(direct + indirect_in + indirect_out));
}

double LdsdCache::get(const Iri& a, const Iri& b) {
    const Iri& lo = a < b ? a : b;
    const Iri& hi = a < b ? b : a;
    std::string key = lo.str();
    key.push_back('\x1f');
    key.append(hi.str());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const double value = ldsd(*graph_, a, b);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(std::move(key), value).first->second;
}

std::size_t LdsdCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

std::vector<double> ldsd_batch_serial(const Graph& graph,
                                      const std::vector<std::pair<Iri, Iri>>& pairs) {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.push_back(ldsd(graph, a, b));
    return out;
}

std::vector<double> ldsd_batch(const Graph& graph, const std::vector<std::pair<Iri, Iri>>& pairs) {
    std::vector<double> out(pairs.size());
    const std::int64_t n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = ldsd(graph, pairs[i].first, pairs[i].second);
    return out;
}

} // namespace revrec::kg
