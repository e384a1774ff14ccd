#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "revrec/eval/metrics.hpp"
#include "revrec/eval/model.hpp"

namespace revrec::eval {

inline constexpr std::array<const char*, 5> kMetricNames = {"precision", "recall", "ndcg", "ebn",
                                                            "diversity"};

struct EvalOptions {
    std::size_t top_n = 10;
    bool parallel = true; // per-user metric loop
};

// Per-configuration outcome: one fold-averaged sample per user (users whose
// test folds never contain a positive item are excluded), and the mean of
// those samples per metric.
struct ConfigReport {
    std::string config;
    std::string note; // e.g. ordering-only weight warnings; empty normally
    std::vector<std::string> users;
    std::map<std::string, std::vector<double>> samples; // metric -> per-user values
    std::map<std::string, double> means;                // metric -> mean over users
};

// Full protocol for one model: per fold, train-side profiles and popularity,
// top-n lists for every user with test-side positives, the five metrics per
// user, then fold-averaged per user.
ConfigReport evaluate_run(const ModelFactory& factory, const RatingDataset& dataset,
                          const FoldPlan& plan, const FeatureTable& features,
                          const EvalOptions& options, std::uint64_t seed);

// `config<TAB>precision<TAB>recall<TAB>ndcg<TAB>ebn<TAB>diversity`, one row
// per configuration, notes as leading # comments.
void write_report(const std::filesystem::path& path, const std::vector<ConfigReport>& reports);

// `config_a<TAB>config_b<TAB>metric<TAB>p_value` for every unordered pair of
// configurations including self-pairs.
void write_significance(const std::filesystem::path& path,
                        const std::vector<ConfigReport>& reports);

} // namespace revrec::eval
