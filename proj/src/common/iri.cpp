#include "revrec/iri.hpp"

#include <cctype>
#include <stdexcept>

namespace revrec {

bool is_valid_iri(std::string_view s) {
    if (s.empty()) return false;
    // scheme: ALPHA *(ALPHA / DIGIT / "+" / "-" / ".") ":"
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    std::size_t colon = std::string_view::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const char c = s[i];
        if (c == ':') {
            colon = i;
            break;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    if (colon == std::string_view::npos || colon + 1 >= s.size()) return false;
    for (const char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (!is_valid_iri(value_))
        throw std::invalid_argument("not an absolute IRI: '" + value_ + "'");
}

} // namespace revrec
