#include "revrec/annotation/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "revrec/tsv.hpp"

namespace revrec::annotation {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted[0];
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

CorpusStats corpus_stats(const std::vector<Review>& reviews, const OccurrenceIndex& index) {
    CorpusStats stats;
    stats.reviews = reviews.size();
    stats.distinct_entities = index.distinct_entities().size();
    stats.total_entities = index.total_occurrences();

    std::set<Iri> items;
    for (const Review& review : reviews) items.insert(review.item);
    stats.items = items.size();

    // distinct entities annotated per reviewed item; unannotated items count 0
    std::vector<double> per_item;
    per_item.reserve(items.size());
    for (const Iri& item : items) {
        const auto* entities = index.entities_of(item);
        per_item.push_back(entities ? static_cast<double>(entities->size()) : 0.0);
    }
    if (per_item.empty()) return stats;

    std::sort(per_item.begin(), per_item.end());
    DistributionSummary d;
    d.min = per_item.front();
    d.max = per_item.back();
    d.q1 = quantile_sorted(per_item, 0.25);
    d.median = quantile_sorted(per_item, 0.50);
    d.q3 = quantile_sorted(per_item, 0.75);
    const double iqr = d.q3 - d.q1;
    d.fence_low = d.q1 - 1.5 * iqr;
    d.fence_high = d.q3 + 1.5 * iqr;
    for (const double v : per_item)
        if (v < d.fence_low || v > d.fence_high) ++d.outliers;
    stats.entities_per_item = d;
    return stats;
}

void print_stats(std::ostream& out, const CorpusStats& stats) {
    out << "reviews\t" << stats.reviews << '\n';
    out << "items\t" << stats.items << '\n';
    out << "distinct_entities\t" << stats.distinct_entities << '\n';
    out << "total_entities\t" << stats.total_entities << '\n';
    if (!stats.entities_per_item) {
        out << "entities_per_item\tabsent\n";
        return;
    }
    const DistributionSummary& d = *stats.entities_per_item;
    out << "entities_per_item_min\t" << format_general6(d.min) << '\n';
    out << "entities_per_item_q1\t" << format_general6(d.q1) << '\n';
    out << "entities_per_item_median\t" << format_general6(d.median) << '\n';
    out << "entities_per_item_q3\t" << format_general6(d.q3) << '\n';
    out << "entities_per_item_max\t" << format_general6(d.max) << '\n';
    out << "outlier_fence_low\t" << format_general6(d.fence_low) << '\n';
    out << "outlier_fence_high\t" << format_general6(d.fence_high) << '\n';
    out << "outliers\t" << d.outliers << '\n';
}

} // namespace revrec::annotation
