// Times the OpenMP kernels against their serial reference implementations on
// synthetic workloads and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "revrec/annotation/annotator.hpp"
#include "revrec/eval/baselines.hpp"
#include "revrec/eval/evaluate.hpp"
#include "revrec/kg/ldsd.hpp"
#include "revrec/parallel.hpp"
#include "revrec/rng.hpp"

using namespace revrec;

namespace {

double elapsed_ms(const std::chrono::steady_clock::time_point start) {
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

void report(const std::string& kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                kernel.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                identical ? "outputs identical" : "OUTPUTS DIFFER");
}

Iri synth_iri(const std::string& kind, std::uint64_t i) {
    return Iri("http://bench.example.org/" + kind + "/" + std::to_string(i));
}

kg::Graph synth_graph(std::size_t nodes, std::size_t triples, Rng& rng) {
    std::vector<kg::Triple> list;
    list.reserve(triples);
    for (std::size_t i = 0; i < triples; ++i) {
        list.push_back(kg::Triple{synth_iri("node", rng.below(nodes)),
                                  synth_iri("prop", rng.below(12)),
                                  synth_iri("node", rng.below(nodes))});
    }
    return kg::Graph::from_triples(std::move(list));
}

void bench_annotation(Rng& rng) {
    std::vector<std::pair<std::string, Iri>> forms;
    std::vector<std::string> words;
    for (std::uint64_t i = 0; i < 400; ++i) {
        words.push_back("word" + std::to_string(i));
        forms.emplace_back(words.back(), synth_iri("ent", i));
    }
    const annotation::GazetteerAnnotator annotator(forms);

    std::vector<annotation::Review> reviews;
    for (std::uint64_t i = 0; i < 4000; ++i) {
        std::string text;
        for (int w = 0; w < 120; ++w) {
            text += words[rng.below(words.size())];
            text += rng.below(4) == 0 ? ", " : " ";
        }
        reviews.push_back(annotation::Review{"r" + std::to_string(i),
                                             synth_iri("item", i % 50), text, std::nullopt});
    }

    auto start = std::chrono::steady_clock::now();
    const auto serial = annotation::annotate_corpus_serial(reviews, annotator);
    const double serial_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = annotation::annotate_corpus(reviews, annotator);
    const double parallel_ms = elapsed_ms(start);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].entity == parallel[i].entity &&
                    serial[i].review_id == parallel[i].review_id;
    report("annotate_corpus", serial_ms, parallel_ms, identical);
}

void bench_ldsd(Rng& rng) {
    const kg::Graph graph = synth_graph(500, 6000, rng);
    std::vector<std::pair<Iri, Iri>> pairs;
    for (std::size_t i = 0; i < 20000; ++i) {
        const std::uint64_t a = rng.below(500);
        std::uint64_t b = rng.below(500);
        if (a == b) b = (b + 1) % 500;
        pairs.emplace_back(synth_iri("node", a), synth_iri("node", b));
    }

    auto start = std::chrono::steady_clock::now();
    const auto serial = kg::ldsd_batch_serial(graph, pairs);
    const double serial_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = kg::ldsd_batch(graph, pairs);
    const double parallel_ms = elapsed_ms(start);

    report("ldsd_batch", serial_ms, parallel_ms, serial == parallel);
}

void bench_evaluate(Rng& rng) {
    eval::RatingDataset dataset;
    dataset.max_scale = 5;
    dataset.positive_threshold = 3;
    for (std::uint64_t u = 0; u < 300; ++u)
        for (std::uint64_t r = 0; r < 40; ++r)
            dataset.records.push_back(
                eval::RatingRecord{"u" + std::to_string(u), synth_iri("item", (u * 7 + r * 13) % 200),
                                   static_cast<double>(1 + rng.below(5))});
    // duplicate (user, item) pairs may exist in the synthetic stream; drop them
    std::set<eval::UserItem> seen;
    std::vector<eval::RatingRecord> unique;
    for (const auto& record : dataset.records)
        if (seen.emplace(record.user_id, record.item).second) unique.push_back(record);
    dataset.records = std::move(unique);

    const eval::FoldPlan plan = eval::split_folds(dataset, 5, 7);
    const eval::FeatureTable features;
    const eval::ItemKnnFactory factory(80);

    auto start = std::chrono::steady_clock::now();
    const auto serial =
        eval::evaluate_run(factory, dataset, plan, features, eval::EvalOptions{10, false}, 7);
    const double serial_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    const auto parallel =
        eval::evaluate_run(factory, dataset, plan, features, eval::EvalOptions{10, true}, 7);
    const double parallel_ms = elapsed_ms(start);

    report("evaluate_run", serial_ms, parallel_ms,
           serial.samples == parallel.samples && serial.means == parallel.means);
}

} // namespace

int main() {
    std::printf("OpenMP: %s, %d thread(s)\n", openmp_enabled() ? "enabled" : "disabled",
                max_threads());
    Rng rng(20240817);
    bench_annotation(rng);
    bench_ldsd(rng);
    bench_evaluate(rng);
    return 0;
}
