#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "revrec/cli/commands.hpp"
#include "revrec/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"review-based recommendations over a local knowledge graph"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "pipeline configuration file")->required();
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "override the configured random seed");
    std::optional<std::string> out_dir;
    app.add_option("--out", out_dir, "override the configured output directory");

    CLI::App* annotate =
        app.add_subcommand("annotate", "annotate reviews and build the occurrence index");
    annotate->fallthrough();

    CLI::App* discover =
        app.add_subcommand("discover", "expand entities through the knowledge graph");
    discover->fallthrough();
    bool with_ldsd = false;
    discover->add_flag("--with-ldsd", with_ldsd, "also compute distances for discovered entities");

    CLI::App* recommend = app.add_subcommand("recommend", "rank entities for an item or a user");
    recommend->fallthrough();
    std::optional<std::string> item;
    recommend->add_option("--item", item, "seed item IRI");
    std::optional<std::string> user;
    recommend->add_option("--user", user, "user id from the ratings file");
    std::string config_row;
    recommend->add_option("--config-row", config_row, "grid row name to apply")->required();
    std::size_t top_n = 10;
    recommend->add_option("--top", top_n, "list length");

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "run the offline evaluation over the configured grid");
    evaluate->fallthrough();

    CLI::App* stats = app.add_subcommand("stats", "print corpus statistics");
    stats->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const revrec::cli::PipelineConfig config = revrec::cli::PipelineConfig::load(config_path);
        revrec::cli::GlobalOptions global;
        global.seed = seed;
        if (out_dir) global.out = *out_dir;

        if (annotate->parsed())
            revrec::cli::cmd_annotate(config, global, std::cout);
        else if (discover->parsed())
            revrec::cli::cmd_discover(config, global, with_ldsd, std::cerr);
        else if (recommend->parsed())
            revrec::cli::cmd_recommend(config, global, item, user, config_row, top_n, std::cout);
        else if (evaluate->parsed())
            revrec::cli::cmd_evaluate(config, global, std::cout);
        else if (stats->parsed())
            revrec::cli::cmd_stats(config, global, std::cout);
        return kExitOk;
    } catch (const revrec::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const revrec::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const revrec::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const revrec::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
