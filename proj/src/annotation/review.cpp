#include "revrec/annotation/review.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "revrec/errors.hpp"

namespace revrec::annotation {

std::vector<Review> ingest_reviews(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read review corpus " + path.string());

    std::vector<Review> reviews;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path.string(), line_no, std::string("bad JSON: ") + e.what());
        }

        try {
            if (!obj.is_object() || !obj.contains("review_id") || !obj.contains("item"))
                throw ParseError(path.string(), line_no, "review_id and item are required");

            Review review{obj.at("review_id").get<std::string>(),
                          Iri(obj.at("item").get<std::string>()),
                          obj.value("text", std::string{}),
                          std::nullopt};
            if (obj.contains("entities")) {
                std::vector<Iri> entities;
                for (const auto& e : obj.at("entities"))
                    entities.push_back(Iri(e.get<std::string>()));
                review.entities = std::move(entities);
            }
            if (!seen_ids.insert(review.review_id).second)
                throw ValidationError("duplicate review_id '" + review.review_id + "' at " +
                                      path.string() + ":" + std::to_string(line_no));
            reviews.push_back(std::move(review));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path.string(), line_no, std::string("bad review object: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return reviews;
}

} // namespace revrec::annotation
