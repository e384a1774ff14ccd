#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "revrec/kg/graph.hpp"

namespace revrec::kg {

struct PropertySpec {
    Iri property;
    Direction direction;
};

// A resource reached from an annotated entity through one configured
// property. The distance between the two is filled in on demand because it is
// expensive to compute.
struct DiscoveryRecord {
    Iri discovered;
    Iri source;
    std::optional<double> ldsd; // in [0,1] when present
};

// One record per (discovered, source) pair, self-loops suppressed, sorted by
// (discovered, source). Distances are left unset.
std::vector<DiscoveryRecord> discover(const Graph& graph, const std::set<Iri>& annotated,
                                      const std::vector<PropertySpec>& specs);

// Fills record.ldsd for every record. OpenMP kernel plus the serial reference.
void attach_ldsd(const Graph& graph, std::vector<DiscoveryRecord>& records);
void attach_ldsd_serial(const Graph& graph, std::vector<DiscoveryRecord>& records);

// Discovered-entity store with lookups from either end of a record.
// File format: `discovered<TAB>source<TAB>ldsd_or_NA`.
class DiscoveryStore {
public:
    DiscoveryStore() = default;
    explicit DiscoveryStore(std::vector<DiscoveryRecord> records);

    static DiscoveryStore load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    const std::vector<DiscoveryRecord>& records() const { return records_; }
    std::vector<const DiscoveryRecord*> by_source(const Iri& source) const;
    std::vector<const DiscoveryRecord*> by_discovered(const Iri& discovered) const;
    bool any_missing_ldsd() const;

private:
    std::vector<DiscoveryRecord> records_;
    std::map<Iri, std::vector<std::size_t>> source_index_;
    std::map<Iri, std::vector<std::size_t>> discovered_index_;
};

} // namespace revrec::kg
