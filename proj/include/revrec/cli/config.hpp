#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "revrec/iri.hpp"
#include "revrec/kg/discovery.hpp"
#include "revrec/rec/config.hpp"

namespace revrec::cli {

// One flat key-value file with [section] headers drives every pipeline stage.
// Relative paths are resolved against the config file's directory. Keys are
// documented in the README.
struct PipelineConfig {
    std::filesystem::path config_dir;

    // [paths]
    std::optional<std::filesystem::path> graph;
    std::optional<std::filesystem::path> reviews;
    std::optional<std::filesystem::path> gazetteer;
    std::optional<std::filesystem::path> ratings;
    std::optional<std::filesystem::path> mapping;
    std::filesystem::path out = "out";

    // [domain]
    std::string domain;

    // [annotation]
    std::optional<Iri> type_property;
    std::optional<std::string> type_namespace;
    bool filter_by_type = false;

    // [discovery]
    std::vector<kg::PropertySpec> discovery_specs;

    // [recommendation]
    std::vector<rec::RecConfig> grid;

    // [evaluation]
    int folds = 5;
    std::size_t top_n = 10;
    std::uint64_t seed = 42;
    double rating_scale = 5.0;
    double positive_threshold = 3.0;
    std::vector<std::string> baselines; // subset of {popular, random, knn}
    std::size_t knn_k = 80;

    static PipelineConfig load(const std::filesystem::path& path);

    const rec::RecConfig& grid_row(const std::string& name) const; // throws ValidationError
};

// `config =` row grammar: NAME key=value...; keys: ranking, discovered,
// threshold, alpha, eta, kappa.
rec::RecConfig parse_grid_row(const std::string& value, double default_alpha);

} // namespace revrec::cli
