#include "revrec/rec/config.hpp"

#include "revrec/errors.hpp"

namespace revrec::rec {

std::string to_string(Ranking r) {
    switch (r) {
        case Ranking::R1: return "R1";
        case Ranking::R2: return "R2";
        case Ranking::R3: return "R3";
    }
    return "?";
}

Ranking ranking_from_string(const std::string& s) {
    if (s == "R1" || s == "r1") return Ranking::R1;
    if (s == "R2" || s == "r2") return Ranking::R2;
    if (s == "R3" || s == "r3") return Ranking::R3;
    throw ValidationError("unknown ranking function '" + s + "'");
}

void RecConfig::validate() const {
    if (name.empty()) throw ValidationError("configuration row needs a name");
    if (occurrence_threshold < 0.0 || occurrence_threshold > 1.0)
        throw ValidationError(name + ": occurrence threshold must lie in [0,1]");
    if (alpha <= 0.0 || alpha > 1.0)
        throw ValidationError(name + ": alpha must lie in (0,1]");
    if (ranking == Ranking::R3) {
        if (!eta || !kappa)
            throw ValidationError(name + ": R3 requires both eta and kappa");
        if (*eta < 0.0 || *kappa < 0.0)
            throw ValidationError(name + ": eta and kappa must be non-negative");
    }
}

} // namespace revrec::rec
