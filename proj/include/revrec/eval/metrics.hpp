#pragma once

#include <map>
#include <set>
#include <vector>

#include "revrec/annotation/occurrence.hpp"
#include "revrec/iri.hpp"

namespace revrec::eval {

// item -> feature set (the entities annotated in the item's reviews)
using FeatureTable = std::map<Iri, std::set<Iri>>;

FeatureTable features_from_index(const annotation::OccurrenceIndex& index);

// item -> fraction of training users who rated it
using PopularityTable = std::map<Iri, double>;

std::size_t hit_count(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n);

// hits / n, the denominator fixed at the cutoff even for shorter lists
double precision_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n);

// hits / |relevant|; 0 when the relevant set is empty
double recall_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n);

// binary-gain DCG over the first n ranks, normalized by the ideal DCG of
// min(|relevant|, n) hits; 0 when the relevant set is empty
double ndcg_at_n(const std::vector<Iri>& list, const std::set<Iri>& relevant, std::size_t n);

// sum over the list of -p * log2(p), with 0 log 0 = 0; unknown items count as
// popularity 0. Lower values mean more novel lists.
double ebn(const std::vector<Iri>& list, const PopularityTable& popularity);

// average pairwise (1 - cosine) over the items' binary feature vectors;
// 0 for lists shorter than two; an item without features is at distance 1
// from everything
double ild_diversity(const std::vector<Iri>& list, const FeatureTable& features);

} // namespace revrec::eval
