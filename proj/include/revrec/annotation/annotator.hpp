#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "revrec/annotation/review.hpp"
#include "revrec/iri.hpp"
#include "revrec/kg/graph.hpp"

namespace revrec::annotation {

struct Mention {
    Iri entity;
    std::string review_id;
};

// Identifies entities mentioned in a review's text. Implementations must be
// deterministic and safe to call concurrently on distinct reviews.
class Annotator {
public:
    virtual ~Annotator() = default;
    virtual std::vector<Mention> annotate(const Review& review) const = 0;
};

// Dictionary annotator: case-insensitive, longest-match, non-overlapping scan
// of the text against surface forms, matching only at word boundaries. Each
// entity yields at most one mention per review.
class GazetteerAnnotator : public Annotator {
public:
    // Surfaces are lowercased on construction; duplicate surfaces are invalid.
    explicit GazetteerAnnotator(const std::vector<std::pair<std::string, Iri>>& surface_forms);

    // TSV `surface_form<TAB>entity_iri`, no header.
    static GazetteerAnnotator load(const std::filesystem::path& path);

    std::vector<Mention> annotate(const Review& review) const override;
    std::size_t size() const { return surfaces_.size(); }

private:
    std::map<std::string, Iri> surfaces_; // lowercase surface -> entity
    // first lowercase token -> surfaces starting with it, longest first;
    // transparent comparator so the scan can probe with string_views
    std::map<std::string, std::vector<const std::pair<const std::string, Iri>*>, std::less<>>
        by_first_token_;
};

// Adapter for a remote annotation service. Sends the review text as
// `text/plain` via POST and expects `{"entities": ["<iri>", ...]}` back.
// Satisfies the same contract as the gazetteer; requires a reachable service.
class RemoteAnnotator : public Annotator {
public:
    RemoteAnnotator(std::string host, int port, std::string path = "/annotate");
    std::vector<Mention> annotate(const Review& review) const override;

private:
    std::string host_;
    int port_;
    std::string path_;
};

// Annotates every review: pre-annotated reviews contribute their attached
// entities directly, the rest go through the annotator. Mentions come back in
// review order with per-review entities deduplicated, so the parallel kernel
// and the serial reference produce identical output.
std::vector<Mention> annotate_corpus(const std::vector<Review>& reviews, const Annotator& annotator);
std::vector<Mention> annotate_corpus_serial(const std::vector<Review>& reviews,
                                            const Annotator& annotator);

// Mentions of a single review; applies the pre-annotation bypass.
std::vector<Mention> annotate_review(const Review& review, const Annotator& annotator);

// Optional post-filter: keep only mentions whose entity has at least one type
// under the given namespace.
std::vector<Mention> filter_mentions_by_type(const std::vector<Mention>& mentions,
                                             const kg::Graph& graph, const Iri& type_property,
                                             const std::string& namespace_prefix);

} // namespace revrec::annotation
