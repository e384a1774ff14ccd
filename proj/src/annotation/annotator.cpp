#include "revrec/annotation/annotator.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>

#include <httplib.h>
#include <json.hpp>

#include "revrec/errors.hpp"
#include "revrec/tsv.hpp"

namespace revrec::annotation {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Bytes >= 0x80 belong to multi-byte UTF-8 sequences and never split a word.
bool is_word_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u);
}

} // namespace

GazetteerAnnotator::GazetteerAnnotator(const std::vector<std::pair<std::string, Iri>>& surface_forms) {
    for (const auto& [surface, entity] : surface_forms) {
        std::string key = to_lower(surface);
        if (key.empty()) throw ValidationError("empty gazetteer surface form");
        if (!surfaces_.emplace(std::move(key), entity).second)
            throw ValidationError("duplicate gazetteer surface form '" + surface + "'");
    }
    for (const auto& entry : surfaces_) {
        std::size_t end = 0;
        while (end < entry.first.size() && is_word_char(entry.first[end])) ++end;
        by_first_token_[entry.first.substr(0, end)].push_back(&entry);
    }
    // longest surface first so the scan can stop at the first hit
    for (auto& [token, entries] : by_first_token_) {
        std::sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
            if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
            return a->first < b->first;
        });
    }
}

GazetteerAnnotator GazetteerAnnotator::load(const std::filesystem::path& path) {
    std::vector<std::pair<std::string, Iri>> forms;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 2)
            throw ParseError(path.string(), line_no, "expected 2 tab-separated fields");
        try {
            forms.emplace_back(fields[0], Iri(fields[1]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return GazetteerAnnotator(forms);
}

std::vector<Mention> GazetteerAnnotator::annotate(const Review& review) const {
    const std::string lower = to_lower(review.text);
    std::vector<Mention> mentions;

    std::size_t i = 0;
    while (i < lower.size()) {
        if (!is_word_char(lower[i])) {
            ++i;
            continue;
        }
        std::size_t word_end = i;
        while (word_end < lower.size() && is_word_char(lower[word_end])) ++word_end;

        const auto bucket =
            by_first_token_.find(std::string_view(lower.data() + i, word_end - i));
        bool matched = false;
        if (bucket != by_first_token_.end()) {
            for (const auto* entry : bucket->second) {
                const std::string& surface = entry->first;
                if (lower.compare(i, surface.size(), surface) != 0) continue;
                const std::size_t end = i + surface.size();
                if (end < lower.size() && is_word_char(lower[end])) continue;
                const bool fresh =
                    std::none_of(mentions.begin(), mentions.end(),
                                 [&](const Mention& m) { return m.entity == entry->second; });
                if (fresh) mentions.push_back(Mention{entry->second, review.review_id});
                i = end;
                matched = true;
                break;
            }
        }
        if (!matched) i = word_end;
    }
    return mentions;
}

RemoteAnnotator::RemoteAnnotator(std::string host, int port, std::string path)
    : host_(std::move(host)), port_(port), path_(std::move(path)) {}

std::vector<Mention> RemoteAnnotator::annotate(const Review& review) const {
    httplib::Client client(host_, port_);
    const httplib::Result result = client.Post(path_, review.text, "text/plain");
    if (!result || result->status != 200)
        throw IoError("annotation service " + host_ + path_ + " unavailable");
    std::vector<Mention> mentions;
    std::set<Iri> seen;
    try {
        const nlohmann::json body = nlohmann::json::parse(result->body);
        for (const auto& e : body.at("entities")) {
            Iri entity(e.get<std::string>());
            if (seen.insert(entity).second)
                mentions.push_back(Mention{std::move(entity), review.review_id});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(host_ + path_, 0, std::string("bad service response: ") + e.what());
    }
    return mentions;
}

std::vector<Mention> annotate_review(const Review& review, const Annotator& annotator) {
    if (review.entities) {
        std::vector<Mention> mentions;
        std::set<Iri> seen;
        for (const Iri& entity : *review.entities)
            if (seen.insert(entity).second) mentions.push_back(Mention{entity, review.review_id});
        return mentions;
    }
    return annotator.annotate(review);
}

std::vector<Mention> annotate_corpus_serial(const std::vector<Review>& reviews,
                                            const Annotator& annotator) {
    std::vector<Mention> all;
    for (const Review& review : reviews) {
        std::vector<Mention> mentions = annotate_review(review, annotator);
        all.insert(all.end(), std::make_move_iterator(mentions.begin()),
                   std::make_move_iterator(mentions.end()));
    }
    return all;
}

std::vector<Mention> annotate_corpus(const std::vector<Review>& reviews, const Annotator& annotator) {
    std::vector<std::vector<Mention>> per_review(reviews.size());
    const std::int64_t n = static_cast<std::int64_t>(reviews.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        per_review[static_cast<std::size_t>(i)] =
            annotate_review(reviews[static_cast<std::size_t>(i)], annotator);

    std::vector<Mention> all;
    for (std::vector<Mention>& mentions : per_review)
        all.insert(all.end(), std::make_move_iterator(mentions.begin()),
                   std::make_move_iterator(mentions.end()));
    return all;
}

std::vector<Mention> filter_mentions_by_type(const std::vector<Mention>& mentions,
                                             const kg::Graph& graph, const Iri& type_property,
                                             const std::string& namespace_prefix) {
    std::vector<Mention> kept;
    std::map<Iri, bool> verdict; // entity -> has a type under the namespace
    for (const Mention& mention : mentions) {
        auto it = verdict.find(mention.entity);
        if (it == verdict.end()) {
            const bool ok = !graph.types_of(mention.entity, type_property, namespace_prefix).empty();
            it = verdict.emplace(mention.entity, ok).first;
        }
        if (it->second) kept.push_back(mention);
    }
    return kept;
}

} // namespace revrec::annotation
