#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "revrec/iri.hpp"

namespace revrec::annotation {

struct Review {
    std::string review_id;
    Iri item;
    std::string text; // may be empty when the review arrives pre-annotated
    std::optional<std::vector<Iri>> entities; // pre-annotations; bypass the annotator
};

// JSON lines, one review object per line:
//   {"review_id": "...", "item": "<iri>", "text": "..."}      or
//   {"review_id": "...", "item": "<iri>", "entities": ["<iri>", ...]}
// review_id values must be unique across the corpus.
std::vector<Review> ingest_reviews(const std::filesystem::path& path);

} // namespace revrec::annotation
