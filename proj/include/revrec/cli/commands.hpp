#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "revrec/cli/config.hpp"

namespace revrec::cli {

// Overrides from the global command-line flags.
struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out;
};

// Builds the occurrence index (and the types file when the graph and a type
// property are configured) and prints the corpus summary.
void cmd_annotate(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out);

// Expands the indexed entities through the configured properties and writes
// the discovered-entity file. Distances only with with_ldsd.
void cmd_discover(const PipelineConfig& config, const GlobalOptions& global, bool with_ldsd,
                  std::ostream& err);

// Recommendations for one seed item or one user, as TSV on out.
void cmd_recommend(const PipelineConfig& config, const GlobalOptions& global,
                   const std::optional<std::string>& item, const std::optional<std::string>& user,
                   const std::string& config_row, std::size_t top_n, std::ostream& out);

// Runs every grid row plus the enabled baselines under the fold plan and
// writes report.tsv and significance.tsv.
void cmd_evaluate(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out);

// Prints the corpus summary without writing any files.
void cmd_stats(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out);

} // namespace revrec::cli
