#include "revrec/kg/discovery.hpp"

#include <algorithm>
#include <cstdint>

#include "revrec/errors.hpp"
#include "revrec/kg/ldsd.hpp"
#include "revrec/tsv.hpp"

namespace revrec::kg {

std::vector<DiscoveryRecord> discover(const Graph& graph, const std::set<Iri>& annotated,
                                      const std::vector<PropertySpec>& specs) {
    std::set<std::pair<Iri, Iri>> seen; // (discovered, source)
    for (const Iri& entity : annotated) {
        for (const PropertySpec& spec : specs) {
            for (const Iri& reached : graph.neighbors(entity, spec.property, spec.direction)) {
                if (reached == entity) continue;
                seen.emplace(reached, entity);
            }
        }
    }
    std::vector<DiscoveryRecord> records;
    records.reserve(seen.size());
    for (const auto& [discovered, source] : seen)
        records.push_back(DiscoveryRecord{discovered, source, std::nullopt});
    return records;
}

void attach_ldsd_serial(const Graph& graph, std::vector<DiscoveryRecord>& records) {
    for (DiscoveryRecord& r : records) r.ldsd = ldsd(graph, r.discovered, r.source);
}

void attach_ldsd(const Graph& graph, std::vector<DiscoveryRecord>& records) {
    const std::int64_t n = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        DiscoveryRecord& r = records[static_cast<std::size_t>(i)];
        r.ldsd = ldsd(graph, r.discovered, r.source);
    }
}

DiscoveryStore::DiscoveryStore(std::vector<DiscoveryRecord> records)
    : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(), [](const DiscoveryRecord& a, const DiscoveryRecord& b) {
        return std::tie(a.discovered, a.source) < std::tie(b.discovered, b.source);
    });
    for (std::size_t i = 0; i < records_.size(); ++i) {
        source_index_[records_[i].source].push_back(i);
        discovered_index_[records_[i].discovered].push_back(i);
    }
}

DiscoveryStore DiscoveryStore::load(const std::filesystem::path& path) {
    std::vector<DiscoveryRecord> records;
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(path)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw ParseError(path.string(), line_no, "expected 3 tab-separated fields");
        std::optional<double> d;
        if (fields[2] != "NA") {
            try {
                d = std::stod(fields[2]);
            } catch (const std::exception&) {
                throw ParseError(path.string(), line_no, "bad distance value '" + fields[2] + "'");
            }
            if (*d < 0.0 || *d > 1.0)
                throw ParseError(path.string(), line_no, "distance outside [0,1]");
        }
        try {
            records.push_back(DiscoveryRecord{Iri(fields[0]), Iri(fields[1]), d});
        } catch (const std::invalid_argument& e) {
            throw ParseError(path.string(), line_no, e.what());
        }
    }
    return DiscoveryStore(std::move(records));
}

void DiscoveryStore::save(const std::filesystem::path& path) const {
    AtomicWriter writer(path);
    for (const DiscoveryRecord& r : records_) {
        writer.stream() << r.discovered.str() << '\t' << r.source.str() << '\t'
                        << (r.ldsd ? format_fixed6(*r.ldsd) : "NA") << '\n';
    }
    writer.commit();
}

std::vector<const DiscoveryRecord*> DiscoveryStore::by_source(const Iri& source) const {
    std::vector<const DiscoveryRecord*> out;
    const auto it = source_index_.find(source);
    if (it == source_index_.end()) return out;
    for (const std::size_t i : it->second) out.push_back(&records_[i]);
    return out;
}

std::vector<const DiscoveryRecord*> DiscoveryStore::by_discovered(const Iri& discovered) const {
    std::vector<const DiscoveryRecord*> out;
    const auto it = discovered_index_.find(discovered);
    if (it == discovered_index_.end()) return out;
    for (const std::size_t i : it->second) out.push_back(&records_[i]);
    return out;
}

bool DiscoveryStore::any_missing_ldsd() const {
    return std::any_of(records_.begin(), records_.end(),
                       [](const DiscoveryRecord& r) { return !r.ldsd.has_value(); });
}

} // namespace revrec::kg
