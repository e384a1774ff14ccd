#include <doctest.h>

#include <cmath>
#include <functional>

#include "revrec/eval/baselines.hpp"
#include "revrec/eval/evaluate.hpp"
#include "revrec/eval/folds.hpp"
#include "revrec/eval/metrics.hpp"
#include "revrec/eval/ratings.hpp"
#include "revrec/eval/significance.hpp"
#include "revrec/errors.hpp"
#include "revrec/rng.hpp"
#include "revrec/tsv.hpp"
#include "helpers.hpp"

using namespace revrec;
using namespace revrec::eval;

namespace {

Iri iri(const std::string& local) { return Iri("http://x.example.org/" + local); }

RatingDataset dataset_of(std::vector<std::tuple<std::string, std::string, double>> rows,
                         double scale = 5.0, double threshold = 3.0) {
    RatingDataset dataset;
    dataset.max_scale = scale;
    dataset.positive_threshold = threshold;
    for (const auto& [user, item, rating] : rows)
        dataset.records.push_back(RatingRecord{user, iri(item), rating});
    return dataset;
}

} // namespace

TEST_CASE("binarization is strictly greater-than") {
    const auto dataset = dataset_of({{"u", "a", 4}, {"u", "b", 3}, {"u", "c", 2}});
    const auto positives = binarize(dataset);
    CHECK(positives.count({"u", iri("a")}) == 1);
    CHECK(positives.count({"u", iri("b")}) == 0);
    CHECK(positives.count({"u", iri("c")}) == 0);

    // implicit feedback: any count above zero is positive
    const auto implicit = dataset_of({{"u", "a", 1}}, 1.0, 0.0);
    CHECK(binarize(implicit).count({"u", iri("a")}) == 1);
}

TEST_CASE("ratings file validation") {
    testutil::TempDir dir("rat");
    SUBCASE("well-formed file") {
        testutil::write_file(dir.file("r.tsv"), "u1\thttp://x.example.org/a\t4\n"
                                                "u2\thttp://x.example.org/a\t2.5\n");
        const auto dataset = RatingDataset::load(dir.file("r.tsv"), 5, 3);
        CHECK(dataset.records.size() == 2);
        CHECK(dataset.item_universe().size() == 1);
        CHECK(dataset.users() == std::vector<std::string>{"u1", "u2"});
    }
    SUBCASE("duplicate pairs are rejected") {
        testutil::write_file(dir.file("r.tsv"), "u1\thttp://x.example.org/a\t4\n"
                                                "u1\thttp://x.example.org/a\t5\n");
        CHECK_THROWS_AS(RatingDataset::load(dir.file("r.tsv"), 5, 3), ValidationError);
    }
    SUBCASE("out-of-scale ratings are rejected") {
        testutil::write_file(dir.file("r.tsv"), "u1\thttp://x.example.org/a\t9\n");
        CHECK_THROWS_AS(RatingDataset::load(dir.file("r.tsv"), 5, 3), ValidationError);
    }
}

TEST_CASE("fold splitting") {
    SUBCASE("ten records of one user split two per fold") {
        std::vector<std::tuple<std::string, std::string, double>> rows;
        for (int i = 0; i < 10; ++i) rows.emplace_back("u", "i" + std::to_string(i), 4.0);
        const auto plan = split_folds(dataset_of(rows), 5, 1);
        std::map<int, int> sizes;
        for (const auto& [key, fold] : plan.assignment) ++sizes[fold];
        for (int f = 0; f < 5; ++f) CHECK(sizes[f] == 2);
    }
    SUBCASE("same seed, same plan; different seed, different shuffle") {
        std::vector<std::tuple<std::string, std::string, double>> rows;
        for (int u = 0; u < 6; ++u)
            for (int i = 0; i < 7; ++i)
                rows.emplace_back("u" + std::to_string(u), "i" + std::to_string(i), 4.0);
        const auto dataset = dataset_of(rows);
        CHECK(split_folds(dataset, 5, 42).assignment == split_folds(dataset, 5, 42).assignment);
        CHECK(split_folds(dataset, 5, 42).assignment != split_folds(dataset, 5, 43).assignment);
    }
    SUBCASE("three records over five folds leave two folds empty") {
        const auto plan = split_folds(dataset_of({{"u", "a", 4}, {"u", "b", 4}, {"u", "c", 4}}), 5, 9);
        std::set<int> used;
        for (const auto& [key, fold] : plan.assignment) used.insert(fold);
        CHECK(used.size() == 3);
    }
}

TEST_CASE("precision, recall and their hit-count identity") {
    const std::vector<Iri> list = {iri("a"), iri("b"), iri("c"), iri("d")};
    const std::set<Iri> relevant = {iri("b"), iri("d"), iri("x"), iri("y"), iri("z")};
    // 2 hits in a top-10 list with 5 relevant items
    CHECK(precision_at_n(list, relevant, 10) == doctest::Approx(0.2));
    CHECK(recall_at_n(list, relevant, 10) == doctest::Approx(0.4));

    Rng rng(111);
    for (int round = 0; round < 50; ++round) {
        std::vector<Iri> l;
        std::set<Iri> rel;
        const std::size_t len = rng.below(9);
        for (std::size_t i = 0; i < len; ++i) {
            Iri item = iri("i" + std::to_string(rng.below(12)));
            if (std::find(l.begin(), l.end(), item) == l.end()) l.push_back(item);
        }
        const std::size_t nrel = rng.below(6);
        for (std::size_t i = 0; i < nrel; ++i) rel.insert(iri("i" + std::to_string(rng.below(12))));
        const std::size_t n = 1 + rng.below(10);
        const double hits = static_cast<double>(hit_count(l, rel, n));
        CHECK(precision_at_n(l, rel, n) * static_cast<double>(n) == doctest::Approx(hits));
        if (!rel.empty())
            CHECK(recall_at_n(l, rel, n) * static_cast<double>(rel.size()) == doctest::Approx(hits));
    }
}

TEST_CASE("ndcg") {
    SUBCASE("perfect list scores one") {
        const std::vector<Iri> list = {iri("a"), iri("b"), iri("c")};
        CHECK(ndcg_at_n(list, {iri("a"), iri("b"), iri("c")}, 10) == doctest::Approx(1.0));
    }
    SUBCASE("single relevant item at rank two") {
        const std::vector<Iri> list = {iri("x"), iri("a")};
        CHECK(ndcg_at_n(list, {iri("a")}, 10) ==
              doctest::Approx(1.0 / std::log2(3.0)).epsilon(1e-12));
    }
    SUBCASE("no hits and no relevant items") {
        CHECK(ndcg_at_n({iri("x")}, {iri("a")}, 10) == 0.0);
        CHECK(ndcg_at_n({iri("x")}, {}, 10) == 0.0);
    }
}

TEST_CASE("entropy-based novelty") {
    PopularityTable pop;
    pop[iri("half")] = 0.5;
    pop[iri("all")] = 1.0;
    pop[iri("none")] = 0.0;
    CHECK(ebn({iri("none")}, pop) == 0.0);
    CHECK(ebn({iri("half")}, pop) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ebn({iri("half"), iri("half")}, pop) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ebn({iri("all")}, pop) == 0.0);
    CHECK(ebn({iri("unknown")}, pop) == 0.0);
    // additivity
    Rng rng(222);
    for (int round = 0; round < 20; ++round) {
        std::vector<Iri> a, b;
        for (std::uint64_t i = 0; i < rng.below(5); ++i) {
            Iri item = iri("p" + std::to_string(rng.below(4)));
            pop[item] = rng.unit();
            a.push_back(item);
        }
        for (std::uint64_t i = 0; i < rng.below(5); ++i) {
            Iri item = iri("q" + std::to_string(rng.below(4)));
            pop[item] = rng.unit();
            b.push_back(item);
        }
        std::vector<Iri> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(ebn(both, pop) == doctest::Approx(ebn(a, pop) + ebn(b, pop)).epsilon(1e-12));
    }
}

TEST_CASE("intra-list diversity") {
    FeatureTable features;
    features[iri("i1")] = {iri("a"), iri("b")};
    features[iri("i2")] = {iri("a"), iri("b")};
    features[iri("i3")] = {iri("c"), iri("d")};
    features[iri("i4")] = {iri("b"), iri("c")};

    CHECK(ild_diversity({iri("i1"), iri("i2")}, features) == doctest::Approx(0.0));
    CHECK(ild_diversity({iri("i1"), iri("i3")}, features) == doctest::Approx(1.0));
    CHECK(ild_diversity({iri("i1"), iri("i4")}, features) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ild_diversity({iri("i1")}, features) == 0.0);
    CHECK(ild_diversity({}, features) == 0.0);
    // an item with no features is maximally distant
    CHECK(ild_diversity({iri("i1"), iri("unknown")}, features) == doctest::Approx(1.0));

    SUBCASE("reordering the list changes nothing") {
        Rng rng(333);
        for (int round = 0; round < 20; ++round) {
            std::vector<Iri> list;
            for (std::uint64_t i = 0; i < 2 + rng.below(6); ++i)
                list.push_back(iri("i" + std::to_string(1 + rng.below(4))));
            std::vector<Iri> shuffled = list;
            rng.shuffle(shuffled);
            CHECK(ild_diversity(list, features) ==
                  doctest::Approx(ild_diversity(shuffled, features)).epsilon(1e-12));
        }
    }
}

namespace {

// Quadrature oracle for the incomplete beta. The substitution t = sin^2(u)
// turns the integrand into 2 sin^(2a-1) cos^(2b-1), which is smooth for the
// tested parameters (a, b >= 1/2), so adaptive Simpson converges cleanly.
double incomplete_beta_oracle(double a, double b, double x) {
    const auto f = [&](double u) {
        return 2.0 * std::pow(std::sin(u), 2.0 * a - 1.0) * std::pow(std::cos(u), 2.0 * b - 1.0);
    };
    const std::function<double(double, double, int)> simpson = [&](double lo, double hi,
                                                                   int depth) -> double {
        const double mid = (lo + hi) / 2;
        const double h = hi - lo;
        const double whole = h / 6 * (f(lo) + 4 * f(mid) + f(hi));
        const double left = h / 12 * (f(lo) + 4 * f((lo + mid) / 2) + f(mid));
        const double right = h / 12 * (f(mid) + 4 * f((mid + hi) / 2) + f(hi));
        if (depth > 28 || std::fabs(left + right - whole) < 1e-14) return left + right;
        return simpson(lo, mid, depth + 1) + simpson(mid, hi, depth + 1);
    };
    const double beta = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    return simpson(0.0, std::asin(std::sqrt(x)), 0) / beta;
}

} // namespace

TEST_CASE("regularized incomplete beta against quadrature") {
    const double params[][2] = {{0.5, 0.5}, {1.0, 3.0}, {2.5, 0.5}, {4.0, 4.0}, {10.0, 0.5}};
    for (const auto& [a, b] : params)
        for (double x = 0.05; x < 1.0; x += 0.13)
            CHECK(regularized_incomplete_beta(a, b, x) ==
                  doctest::Approx(incomplete_beta_oracle(a, b, x)).epsilon(1e-10));
    CHECK(regularized_incomplete_beta(2, 3, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2, 3, 1.0) == 1.0);
}

TEST_CASE("welch t-test") {
    SUBCASE("hand-computed two-sample fixture") {
        // a = [1..5]: mean 3, var 2.5; b = [2,4,6,8]: mean 5, var 20/3
        // t  = -2 / sqrt(2.5/5 + (20/3)/4)   = -1.3587324409735151
        // df = (13/6)^2 / ((1/2)^2/4 + (5/3)^2/3) = 2028/427 = 4.749414519906323
        const WelchResult r = welch_t_test({1, 2, 3, 4, 5}, {2, 4, 6, 8});
        CHECK(r.t == doctest::Approx(-1.3587324409735151).epsilon(1e-9));
        CHECK(r.df == doctest::Approx(4.749414519906323).epsilon(1e-9));
        CHECK(r.p == doctest::Approx(student_t_two_sided_p(r.t, r.df)));
        CHECK(r.p > 0.0);
        CHECK(r.p < 1.0);
    }
    SUBCASE("identical samples give the null result") {
        const WelchResult r = welch_t_test({0.3, 0.3, 0.3}, {0.3, 0.3, 0.3});
        CHECK(r.t == 0.0);
        CHECK(r.p == 1.0);
    }
    SUBCASE("constant samples with different means are overwhelmingly significant") {
        const WelchResult r = welch_t_test({0, 0, 0, 0}, {1, 1, 1, 1});
        CHECK(r.p < 1e-6);
    }
    SUBCASE("swapping the samples negates t and keeps p") {
        const WelchResult ab = welch_t_test({1, 2, 3, 9}, {2, 2, 4, 4, 7});
        const WelchResult ba = welch_t_test({2, 2, 4, 4, 7}, {1, 2, 3, 9});
        CHECK(ab.t == doctest::Approx(-ba.t).epsilon(1e-12));
        CHECK(ab.p == doctest::Approx(ba.p).epsilon(1e-12));
    }
    SUBCASE("tiny samples are rejected") {
        CHECK_THROWS_AS(welch_t_test({1}, {1, 2}), ValidationError);
    }
}

namespace {

RatingDataset toy_dataset() {
    // u1..u5; "hit" is liked by almost everyone
    return dataset_of({
        {"u1", "hit", 5}, {"u1", "a", 4}, {"u1", "b", 2},
        {"u2", "hit", 5}, {"u2", "b", 4}, {"u2", "c", 2},
        {"u3", "hit", 4}, {"u3", "c", 4}, {"u3", "a", 1},
        {"u4", "hit", 5}, {"u4", "a", 5}, {"u4", "c", 1},
        {"u5", "a", 4},   {"u5", "b", 4}, {"u5", "c", 4},
    });
}

} // namespace

TEST_CASE("most popular baseline") {
    const auto dataset = toy_dataset();
    // train on everything for determinism of this check
    TrainContext ctx;
    ctx.dataset = &dataset;
    ctx.item_universe = dataset.item_universe();
    for (const RatingRecord& r : dataset.records) {
        ctx.train.push_back(&r);
        ctx.rated_by_user[r.user_id].insert(r.item);
        if (is_positive(dataset, r)) {
            ctx.train_positives.emplace(r.user_id, r.item);
            ctx.liked_by_user[r.user_id].insert(r.item);
        }
    }
    const auto model = MostPopularFactory{}.train(ctx);
    SUBCASE("an unrated blockbuster tops the list") {
        const auto list = model->top_n("u5", 10);
        REQUIRE_FALSE(list.empty());
        CHECK(list[0] == iri("hit"));
    }
    SUBCASE("users who rated it see the runner-up first") {
        const auto list = model->top_n("u1", 10);
        REQUIRE_FALSE(list.empty());
        // u1 rated hit, a and b; only c is left
        CHECK(list[0] == iri("c"));
    }
    SUBCASE("equal positive counts break ties by ascending IRI") {
        // positive counts: hit 4, a 3, b 2, c 2; b and c tie
        const auto list = model->top_n("probe", 10);
        REQUIRE(list.size() == 4);
        CHECK(list == std::vector<Iri>{iri("hit"), iri("a"), iri("b"), iri("c")});
    }
}

TEST_CASE("users without test positives never enter the averages") {
    // u_neg rates everything below the threshold, so no fold can hold a
    // positive test pair for them
    auto dataset = toy_dataset();
    dataset.records.push_back(RatingRecord{"u_neg", iri("a"), 2});
    dataset.records.push_back(RatingRecord{"u_neg", iri("b"), 1});
    dataset.records.push_back(RatingRecord{"u_neg", iri("c"), 2});
    const FoldPlan plan = split_folds(dataset, 3, 5);
    const auto report =
        evaluate_run(MostPopularFactory{}, dataset, plan, FeatureTable{}, EvalOptions{10, true}, 5);
    CHECK(std::find(report.users.begin(), report.users.end(), "u_neg") == report.users.end());
    for (const char* metric : kMetricNames)
        CHECK(report.samples.at(metric).size() == report.users.size());
}

TEST_CASE("random baseline is reproducible and exclusion-safe") {
    const auto dataset = toy_dataset();
    const FoldPlan plan = split_folds(dataset, 5, 3);
    const TrainContext ctx = make_train_context(dataset, plan, 1, 99);
    const auto model1 = RandomFactory{}.train(ctx);
    const auto model2 = RandomFactory{}.train(ctx);
    for (const std::string& user : dataset.users()) {
        CHECK(model1->top_n(user, 10) == model2->top_n(user, 10));
        const auto rated = ctx.rated_by_user.find(user);
        if (rated == ctx.rated_by_user.end()) continue;
        for (const Iri& item : model1->top_n(user, 10))
            CHECK(rated->second.count(item) == 0);
    }
}

TEST_CASE("random baseline precision approaches the sampling expectation") {
    // 20-item universe, 5 relevant items, lists of 10: expected hits follow the
    // hypergeometric mean 10 * 5/20, i.e. precision 0.25
    RatingDataset dataset;
    dataset.max_scale = 5;
    dataset.positive_threshold = 3;
    for (int i = 0; i < 20; ++i)
        dataset.records.push_back(RatingRecord{"filler", iri("i" + std::to_string(i)), 1});

    std::set<Iri> relevant;
    for (int i = 0; i < 5; ++i) relevant.insert(iri("i" + std::to_string(i)));

    double total_precision = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        TrainContext ctx;
        ctx.dataset = &dataset;
        ctx.seed = seed;
        ctx.item_universe = dataset.item_universe();
        const auto model = RandomFactory{}.train(ctx);
        total_precision += precision_at_n(model->top_n("probe", 10), relevant, 10);
    }
    CHECK(total_precision / 200.0 == doctest::Approx(0.25).epsilon(0.16));
}

TEST_CASE("item knn cosine and scoring") {
    SUBCASE("identical rater sets have similarity one, disjoint zero") {
        CHECK(item_cosine({"u1", "u2"}, {"u1", "u2"}) == doctest::Approx(1.0));
        CHECK(item_cosine({"u1"}, {"u2"}) == 0.0);
        CHECK(item_cosine({}, {"u1"}) == 0.0);
    }
    SUBCASE("scores match a brute-force cosine sum on a small matrix") {
        // 3 users x 4 items binary matrix
        const auto dataset = dataset_of({
            {"u1", "a", 5}, {"u1", "b", 5},
            {"u2", "a", 5}, {"u2", "c", 5},
            {"u3", "b", 5}, {"u3", "c", 5}, {"u3", "d", 5},
        });
        TrainContext ctx;
        ctx.dataset = &dataset;
        ctx.item_universe = dataset.item_universe();
        for (const RatingRecord& r : dataset.records) {
            ctx.train.push_back(&r);
            ctx.rated_by_user[r.user_id].insert(r.item);
            ctx.train_positives.emplace(r.user_id, r.item);
            ctx.liked_by_user[r.user_id].insert(r.item);
        }
        const auto model = ItemKnnFactory{80}.train(ctx);

        // raters: a:{u1,u2} b:{u1,u3} c:{u2,u3} d:{u3}
        std::map<std::string, std::set<std::string>> raters = {
            {"a", {"u1", "u2"}}, {"b", {"u1", "u3"}}, {"c", {"u2", "u3"}}, {"d", {"u3"}}};
        const auto sim = [&](const std::string& x, const std::string& y) {
            std::size_t shared = 0;
            for (const auto& u : raters[x])
                if (raters[y].count(u)) ++shared;
            return shared / std::sqrt(static_cast<double>(raters[x].size()) *
                                      static_cast<double>(raters[y].size()));
        };
        // u1 rated a and b; candidates c and d
        const double score_c = sim("c", "a") + sim("c", "b");
        const double score_d = sim("d", "a") + sim("d", "b");
        const auto list = model->top_n("u1", 10);
        REQUIRE(list.size() == 2);
        CHECK(score_c == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(score_d == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        CHECK(list[0] == iri("c"));
        CHECK(list[1] == iri("d"));
    }
}

TEST_CASE("evaluation protocol") {
    const auto dataset = toy_dataset();
    const FoldPlan plan = split_folds(dataset, 3, 17);
    const FeatureTable features;
    const EvalOptions options{10, true};

    SUBCASE("random baseline evaluation is reproducible") {
        const RandomFactory factory;
        const auto once = evaluate_run(factory, dataset, plan, features, options, 17);
        const auto again = evaluate_run(factory, dataset, plan, features, options, 17);
        CHECK(once.samples == again.samples);
        CHECK(once.means == again.means);
        CHECK(once.users == again.users);
    }
    SUBCASE("serial and parallel evaluation agree") {
        const MostPopularFactory factory;
        const auto serial =
            evaluate_run(factory, dataset, plan, features, EvalOptions{10, false}, 17);
        const auto parallel =
            evaluate_run(factory, dataset, plan, features, EvalOptions{10, true}, 17);
        CHECK(serial.samples == parallel.samples);
        CHECK(serial.means == parallel.means);
    }
    SUBCASE("means are the arithmetic mean of the per-user samples") {
        const MostPopularFactory factory;
        const auto report = evaluate_run(factory, dataset, plan, features, options, 17);
        for (const char* metric : kMetricNames) {
            const auto& samples = report.samples.at(metric);
            REQUIRE_FALSE(samples.empty());
            CHECK(report.means.at(metric) == doctest::Approx(mean(samples)).epsilon(1e-12));
        }
    }
}

TEST_CASE("report files") {
    testutil::TempDir dir("rep");
    ConfigReport a;
    a.config = "A";
    a.users = {"u1", "u2"};
    for (const char* metric : kMetricNames) a.samples[metric] = {0.25, 0.75};
    for (const char* metric : kMetricNames) a.means[metric] = 0.5;
    ConfigReport b = a;
    b.config = "B";
    b.note = "demo note";

    write_report(dir.file("report.tsv"), {a, b});
    const std::string report = testutil::read_file(dir.file("report.tsv"));
    CHECK(report == "# B: demo note\n"
                    "A\t0.500000\t0.500000\t0.500000\t0.500000\t0.500000\n"
                    "B\t0.500000\t0.500000\t0.500000\t0.500000\t0.500000\n");

    write_significance(dir.file("sig.tsv"), {a, b});
    const auto lines = revrec::read_lines(dir.file("sig.tsv"));
    REQUIRE(lines.size() == 15); // 3 pairs x 5 metrics
    // self-comparison of identical samples must be p = 1
    CHECK(lines[0] == "A\tA\tprecision\t1");
}
