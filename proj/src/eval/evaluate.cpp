#include "revrec/eval/evaluate.hpp"

#include <algorithm>
#include <cstdint>

#include "revrec/eval/significance.hpp"
#include "revrec/tsv.hpp"

namespace revrec::eval {

TrainContext make_train_context(const RatingDataset& dataset, const FoldPlan& plan, int fold,
                                std::uint64_t seed) {
    TrainContext ctx;
    ctx.dataset = &dataset;
    ctx.fold = fold;
    ctx.seed = seed;
    ctx.item_universe = dataset.item_universe();
    for (const RatingRecord& r : dataset.records) {
        if (plan.fold_of(r.user_id, r.item) == fold) continue;
        ctx.train.push_back(&r);
        ctx.rated_by_user[r.user_id].insert(r.item);
        if (is_positive(dataset, r)) {
            ctx.train_positives.emplace(r.user_id, r.item);
            ctx.liked_by_user[r.user_id].insert(r.item);
        }
    }
    return ctx;
}

namespace {

PopularityTable popularity_from_train(const TrainContext& ctx) {
    std::set<std::string> train_users;
    std::map<Iri, std::set<std::string>> raters;
    for (const RatingRecord* r : ctx.train) {
        train_users.insert(r->user_id);
        raters[r->item].insert(r->user_id);
    }
    PopularityTable table;
    if (train_users.empty()) return table;
    const double total = static_cast<double>(train_users.size());
    for (const auto& [item, users] : raters)
        table[item] = static_cast<double>(users.size()) / total;
    return table;
}

struct UserFoldMetrics {
    bool evaluated = false;
    std::array<double, 5> values{};
};

} // namespace

ConfigReport evaluate_run(const ModelFactory& factory, const RatingDataset& dataset,
                          const FoldPlan& plan, const FeatureTable& features,
                          const EvalOptions& options, std::uint64_t seed) {
    const std::vector<std::string> users = dataset.users();
    std::vector<std::vector<UserFoldMetrics>> per_fold(
        static_cast<std::size_t>(plan.k), std::vector<UserFoldMetrics>(users.size()));

    for (int fold = 0; fold < plan.k; ++fold) {
        const TrainContext ctx = make_train_context(dataset, plan, fold, seed);
        const PopularityTable popularity = popularity_from_train(ctx);

        std::map<std::string, std::set<Iri>> test_positives;
        for (const RatingRecord& r : dataset.records)
            if (plan.fold_of(r.user_id, r.item) == fold && is_positive(dataset, r))
                test_positives[r.user_id].insert(r.item);

        const std::unique_ptr<RankingModel> model = factory.train(ctx);
        std::vector<UserFoldMetrics>& row = per_fold[static_cast<std::size_t>(fold)];

        const std::int64_t n_users = static_cast<std::int64_t>(users.size());
#pragma omp parallel for schedule(dynamic, 4) if (options.parallel)
        for (std::int64_t ui = 0; ui < n_users; ++ui) {
            const std::string& user = users[static_cast<std::size_t>(ui)];
            const auto rel_it = test_positives.find(user);
            if (rel_it == test_positives.end() || rel_it->second.empty()) continue;
            const std::set<Iri>& relevant = rel_it->second;

            const std::vector<Iri> list = model->top_n(user, options.top_n);
            UserFoldMetrics& cell = row[static_cast<std::size_t>(ui)];
            cell.evaluated = true;
            cell.values = {precision_at_n(list, relevant, options.top_n),
                           recall_at_n(list, relevant, options.top_n),
                           ndcg_at_n(list, relevant, options.top_n), ebn(list, popularity),
                           ild_diversity(list, features)};
        }
    }

    ConfigReport report;
    report.config = factory.name();
    for (const char* metric : kMetricNames) report.samples[metric] = {};

    for (std::size_t ui = 0; ui < users.size(); ++ui) {
        std::array<double, 5> sum{};
        int folds_evaluated = 0;
        for (int fold = 0; fold < plan.k; ++fold) {
            const UserFoldMetrics& cell = per_fold[static_cast<std::size_t>(fold)][ui];
            if (!cell.evaluated) continue;
            ++folds_evaluated;
            for (std::size_t m = 0; m < 5; ++m) sum[m] += cell.values[m];
        }
        if (folds_evaluated == 0) continue;
        report.users.push_back(users[ui]);
        for (std::size_t m = 0; m < 5; ++m)
            report.samples[kMetricNames[m]].push_back(sum[m] / folds_evaluated);
    }

    for (const char* metric : kMetricNames) {
        const std::vector<double>& samples = report.samples[metric];
        report.means[metric] = samples.empty() ? 0.0 : mean(samples);
    }
    return report;
}

void write_report(const std::filesystem::path& path, const std::vector<ConfigReport>& reports) {
    AtomicWriter writer(path);
    for (const ConfigReport& report : reports)
        if (!report.note.empty())
            writer.stream() << "# " << report.config << ": " << report.note << '\n';
    for (const ConfigReport& report : reports) {
        writer.stream() << report.config;
        for (const char* metric : kMetricNames)
            writer.stream() << '\t' << format_fixed6(report.means.at(metric));
        writer.stream() << '\n';
    }
    writer.commit();
}

void write_significance(const std::filesystem::path& path,
                        const std::vector<ConfigReport>& reports) {
    AtomicWriter writer(path);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (std::size_t j = i; j < reports.size(); ++j) {
            for (const char* metric : kMetricNames) {
                const std::vector<double>& a = reports[i].samples.at(metric);
                const std::vector<double>& b = reports[j].samples.at(metric);
                std::string p = "NA";
                if (a.size() >= 2 && b.size() >= 2) p = format_general6(welch_t_test(a, b).p);
                writer.stream() << reports[i].config << '\t' << reports[j].config << '\t' << metric
                                << '\t' << p << '\n';
            }
        }
    }
    writer.commit();
}

} // namespace revrec::eval
