#pragma once

#include <optional>
#include <ostream>

#include "revrec/annotation/occurrence.hpp"
#include "revrec/annotation/review.hpp"

namespace revrec::annotation {

// Five-number summary of the per-item entity counts plus the 1.5 IQR outlier
// fence. Quartiles use linear interpolation between order statistics.
struct DistributionSummary {
    double min = 0;
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double max = 0;
    double fence_low = 0;  // q1 - 1.5 * iqr
    double fence_high = 0; // q3 + 1.5 * iqr
    std::size_t outliers = 0;
};

struct CorpusStats {
    std::size_t reviews = 0;
    std::size_t items = 0;             // distinct reviewed items
    std::size_t distinct_entities = 0; // entities with at least one occurrence
    long long total_entities = 0;      // sum of all occurrence counts
    std::optional<DistributionSummary> entities_per_item; // absent for an empty corpus
};

CorpusStats corpus_stats(const std::vector<Review>& reviews, const OccurrenceIndex& index);

// quantile of a sorted sample, p in [0,1], linear interpolation
double quantile_sorted(const std::vector<double>& sorted, double p);

void print_stats(std::ostream& out, const CorpusStats& stats);

} // namespace revrec::annotation
