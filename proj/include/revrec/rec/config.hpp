#pragma once

#include <optional>
#include <string>

namespace revrec::rec {

enum class Ranking { R1, R2, R3 };

std::string to_string(Ranking r);
Ranking ranking_from_string(const std::string& s); // throws ValidationError

// One experiment-grid row: which ranker runs, whether discovered entities
// join the candidate set, the minimum-occurrence threshold, and the weights.
struct RecConfig {
    std::string name;
    Ranking ranking = Ranking::R1;
    bool use_discovered = false;
    double occurrence_threshold = 0.0; // fraction of the seed item's max occurrence
    double alpha = 0.5;                // discovered-entity weight inside R1; annotated entities use 1
    std::optional<double> eta;         // R3 weight of R2
    std::optional<double> kappa;       // R3 weight of 1 - distance to the seed item

    void validate() const; // throws ValidationError
};

} // namespace revrec::rec
