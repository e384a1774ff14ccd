#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace revrec {

bool is_valid_iri(std::string_view s);

// An absolute IRI. Valid instances are non-empty, contain no whitespace and
// start with a scheme ("http:", "urn:", ...).
class Iri {
public:
    explicit Iri(std::string value);

    const std::string& str() const { return value_; }

    friend auto operator<=>(const Iri&, const Iri&) = default;

private:
    std::string value_;
};

inline std::string to_string(const Iri& iri) { return iri.str(); }

} // namespace revrec

template <>
struct std::hash<revrec::Iri> {
    std::size_t operator()(const revrec::Iri& iri) const noexcept {
        return std::hash<std::string>{}(iri.str());
    }
};
