#include "revrec/cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <memory>
#include <set>

#include "revrec/annotation/annotator.hpp"
#include "revrec/annotation/occurrence.hpp"
#include "revrec/annotation/review.hpp"
#include "revrec/annotation/stats.hpp"
#include "revrec/errors.hpp"
#include "revrec/eval/baselines.hpp"
#include "revrec/eval/evaluate.hpp"
#include "revrec/eval/rec_model.hpp"
#include "revrec/kg/mapping.hpp"
#include "revrec/rec/recommender.hpp"
#include "revrec/tsv.hpp"

namespace revrec::cli {

namespace {

std::filesystem::path require_path(const std::optional<std::filesystem::path>& path,
                                   const std::string& what) {
    if (!path) throw ValidationError("config is missing the " + what + " path");
    if (!std::filesystem::exists(*path))
        throw ValidationError(what + " path does not exist: " + path->string());
    return *path;
}

std::filesystem::path out_dir(const PipelineConfig& config, const GlobalOptions& global) {
    const std::filesystem::path dir = global.out.value_or(config.out);
    std::filesystem::create_directories(dir);
    return dir;
}

std::uint64_t effective_seed(const PipelineConfig& config, const GlobalOptions& global) {
    return global.seed.value_or(config.seed);
}

struct AnnotatedCorpus {
    std::vector<annotation::Review> reviews;
    std::vector<annotation::Mention> mentions;
    annotation::OccurrenceIndex index;
    std::size_t dropped_by_mapping = 0;
    std::size_t dropped_by_type = 0;
};

// ingest -> annotate -> (map) -> (type filter) -> index
AnnotatedCorpus run_annotation(const PipelineConfig& config, const kg::Graph* graph) {
    AnnotatedCorpus corpus;
    corpus.reviews = annotation::ingest_reviews(require_path(config.reviews, "reviews"));

    const bool needs_annotator =
        std::any_of(corpus.reviews.begin(), corpus.reviews.end(),
                    [](const annotation::Review& r) { return !r.entities.has_value(); });
    if (needs_annotator && !config.gazetteer)
        throw ValidationError("corpus has un-annotated reviews but no gazetteer is configured");

    if (config.gazetteer) {
        const annotation::GazetteerAnnotator annotator =
            annotation::GazetteerAnnotator::load(require_path(config.gazetteer, "gazetteer"));
        corpus.mentions = annotation::annotate_corpus(corpus.reviews, annotator);
    } else {
        // every review is pre-annotated; the annotator is never consulted
        const annotation::GazetteerAnnotator annotator({});
        corpus.mentions = annotation::annotate_corpus(corpus.reviews, annotator);
    }

    if (config.mapping) {
        const kg::MappingTable table = kg::MappingTable::load(require_path(config.mapping, "mapping"));
        std::vector<annotation::Mention> mapped;
        mapped.reserve(corpus.mentions.size());
        for (annotation::Mention& mention : corpus.mentions) {
            if (auto target = table.target(mention.entity))
                mapped.push_back(annotation::Mention{std::move(*target), mention.review_id});
            else
                ++corpus.dropped_by_mapping; // no one-to-one correspondence
        }
        corpus.mentions = std::move(mapped);
    }

    if (config.filter_by_type) {
        if (!graph || !config.type_property || !config.type_namespace)
            throw ValidationError(
                "filter_by_type needs the graph, type_property and type_namespace");
        const std::size_t before = corpus.mentions.size();
        corpus.mentions = annotation::filter_mentions_by_type(corpus.mentions, *graph,
                                                              *config.type_property,
                                                              *config.type_namespace);
        corpus.dropped_by_type = before - corpus.mentions.size();
    }

    corpus.index = annotation::OccurrenceIndex::build(corpus.reviews, corpus.mentions);
    return corpus;
}

struct LoadedStores {
    annotation::OccurrenceIndex index;
    kg::DiscoveryStore discoveries;
    std::optional<kg::Graph> graph;
    std::unique_ptr<kg::LdsdCache> ldsd;

    rec::Stores view() { return rec::Stores{&index, &discoveries, ldsd.get()}; }
};

LoadedStores load_stores(const PipelineConfig& config, const std::filesystem::path& dir,
                         bool need_discoveries, bool need_graph) {
    LoadedStores stores;
    const std::filesystem::path index_path = dir / "occurrence_index.tsv";
    if (!std::filesystem::exists(index_path))
        throw ValidationError("no occurrence index at " + index_path.string() +
                              "; run `annotate` first");
    stores.index = annotation::OccurrenceIndex::load(index_path);

    if (need_discoveries) {
        const std::filesystem::path discovered_path = dir / "discovered.tsv";
        if (!std::filesystem::exists(discovered_path))
            throw ValidationError("no discovered entities at " + discovered_path.string() +
                                  "; run `discover` first");
        stores.discoveries = kg::DiscoveryStore::load(discovered_path);
    }
    if (need_graph) {
        stores.graph = kg::Graph::load(require_path(config.graph, "graph"));
        stores.ldsd = std::make_unique<kg::LdsdCache>(*stores.graph);
    }
    return stores;
}

void print_scored_list(std::ostream& out, const rec::ScoredList& list) {
    std::size_t rank = 1;
    for (const rec::ScoredEntry& entry : list.entries)
        out << list.subject << '\t' << rank++ << '\t' << entry.entity.str() << '\t'
            << format_fixed6(entry.score) << '\n';
}

} // namespace

void cmd_annotate(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out) {
    std::optional<kg::Graph> graph;
    if (config.graph && (config.type_property || config.filter_by_type))
        graph = kg::Graph::load(require_path(config.graph, "graph"));

    const AnnotatedCorpus corpus = run_annotation(config, graph ? &*graph : nullptr);
    const std::filesystem::path dir = out_dir(config, global);
    corpus.index.save(dir / "occurrence_index.tsv");

    if (graph && config.type_property) {
        AtomicWriter writer(dir / "types.tsv");
        for (const Iri& entity : corpus.index.distinct_entities())
            for (const Iri& type :
                 graph->types_of(entity, *config.type_property, config.type_namespace))
                writer.stream() << entity.str() << '\t' << type.str() << '\n';
        writer.commit();
    }

    if (config.mapping) out << "mentions_dropped_by_mapping\t" << corpus.dropped_by_mapping << '\n';
    if (config.filter_by_type) out << "mentions_dropped_by_type\t" << corpus.dropped_by_type << '\n';
    annotation::print_stats(out, annotation::corpus_stats(corpus.reviews, corpus.index));
}

void cmd_discover(const PipelineConfig& config, const GlobalOptions& global, bool with_ldsd,
                  std::ostream& err) {
    if (config.discovery_specs.empty())
        throw ValidationError("no discovery properties configured");

    const std::filesystem::path dir = out_dir(config, global);
    const std::filesystem::path index_path = dir / "occurrence_index.tsv";
    if (!std::filesystem::exists(index_path))
        throw ValidationError("no occurrence index at " + index_path.string() +
                              "; run `annotate` first");
    const annotation::OccurrenceIndex index = annotation::OccurrenceIndex::load(index_path);

    kg::LoadStats load_stats;
    const kg::Graph graph = kg::Graph::load(require_path(config.graph, "graph"), &load_stats);
    err << "graph: " << load_stats.triples << " triples, " << load_stats.literals_skipped
        << " literal statements skipped, " << load_stats.duplicates << " duplicates\n";

    std::set<Iri> annotated;
    for (const Iri& entity : index.distinct_entities()) annotated.insert(entity);
    std::vector<kg::DiscoveryRecord> records =
        kg::discover(graph, annotated, config.discovery_specs);
    if (with_ldsd) kg::attach_ldsd(graph, records);

    const kg::DiscoveryStore store(std::move(records));
    store.save(dir / "discovered.tsv");
    err << "discovered: " << store.records().size() << " records\n";

    if (!with_ldsd) {
        const bool grid_needs_ldsd = std::any_of(
            config.grid.begin(), config.grid.end(), [](const rec::RecConfig& row) {
                return row.use_discovered && row.ranking != rec::Ranking::R1;
            });
        if (grid_needs_ldsd)
            err << "warning: the grid contains R2/R3 rows with discovery, but distances were "
                   "not computed; rerun with --with-ldsd before `evaluate`\n";
    }
}

void cmd_recommend(const PipelineConfig& config, const GlobalOptions& global,
                   const std::optional<std::string>& item, const std::optional<std::string>& user,
                   const std::string& config_row, std::size_t top_n, std::ostream& out) {
    if (item.has_value() == user.has_value())
        throw ValidationError("pass exactly one of --item or --user");
    const rec::RecConfig& row = config.grid_row(config_row);

    const std::filesystem::path dir = out_dir(config, global);
    LoadedStores stores = load_stores(config, dir, row.use_discovered,
                                      row.ranking == rec::Ranking::R3);
    const rec::Stores view = stores.view();

    if (item) {
        std::optional<Iri> seed;
        try {
            seed.emplace(*item);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        print_scored_list(out, rec::recommend(*seed, top_n, row, view));
        return;
    }

    const eval::RatingDataset dataset = eval::RatingDataset::load(
        require_path(config.ratings, "ratings"), config.rating_scale, config.positive_threshold);
    rec::UserProfile profile{*user, {}, {}};
    for (const eval::RatingRecord& record : dataset.records) {
        if (record.user_id != *user) continue;
        profile.rated_items.insert(record.item);
        if (eval::is_positive(dataset, record)) profile.liked_items.insert(record.item);
    }
    print_scored_list(out, rec::recommend_for_user(profile, top_n, row, view));
}

void cmd_evaluate(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out) {
    if (config.grid.empty() && config.baselines.empty())
        throw ValidationError("nothing to evaluate: no grid rows and no baselines configured");

    const std::filesystem::path dir = out_dir(config, global);
    const bool need_discoveries =
        std::any_of(config.grid.begin(), config.grid.end(),
                    [](const rec::RecConfig& row) { return row.use_discovered; });
    const bool need_graph = std::any_of(config.grid.begin(), config.grid.end(),
                                        [](const rec::RecConfig& row) {
                                            return row.ranking == rec::Ranking::R3;
                                        });
    LoadedStores stores = load_stores(config, dir, need_discoveries, need_graph);

    const eval::RatingDataset dataset = eval::RatingDataset::load(
        require_path(config.ratings, "ratings"), config.rating_scale, config.positive_threshold);
    const std::uint64_t seed = effective_seed(config, global);
    const eval::FoldPlan plan = eval::split_folds(dataset, config.folds, seed);
    const eval::FeatureTable features = eval::features_from_index(stores.index);
    const eval::EvalOptions options{config.top_n, true};

    std::vector<std::unique_ptr<eval::ModelFactory>> factories;
    for (const rec::RecConfig& row : config.grid)
        factories.push_back(std::make_unique<eval::RecommenderFactory>(row, stores.view()));
    for (const std::string& baseline : config.baselines) {
        if (baseline == "popular")
            factories.push_back(std::make_unique<eval::MostPopularFactory>());
        else if (baseline == "random")
            factories.push_back(std::make_unique<eval::RandomFactory>());
        else if (baseline == "knn")
            factories.push_back(std::make_unique<eval::ItemKnnFactory>(config.knn_k));
    }

    std::vector<eval::ConfigReport> reports;
    for (const auto& factory : factories) {
        eval::ConfigReport report = eval::evaluate_run(*factory, dataset, plan, features,
                                                       options, seed);
        if (const auto* rec_factory = dynamic_cast<const eval::RecommenderFactory*>(factory.get())) {
            const rec::RecConfig& row = rec_factory->config();
            if (row.ranking == rec::Ranking::R3 && *row.eta + *row.kappa > 1.0)
                report.note = "eta+kappa > 1, scores rank candidates but are not bounded by 1";
        }
        reports.push_back(std::move(report));
        out << "evaluated\t" << reports.back().config << '\n';
    }

    eval::write_report(dir / "report.tsv", reports);
    eval::write_significance(dir / "significance.tsv", reports);
}

void cmd_stats(const PipelineConfig& config, const GlobalOptions& global, std::ostream& out) {
    (void)global;
    std::optional<kg::Graph> graph;
    if (config.graph && config.filter_by_type)
        graph = kg::Graph::load(require_path(config.graph, "graph"));
    const AnnotatedCorpus corpus = run_annotation(config, graph ? &*graph : nullptr);
    annotation::print_stats(out, annotation::corpus_stats(corpus.reviews, corpus.index));
}

} // namespace revrec::cli
