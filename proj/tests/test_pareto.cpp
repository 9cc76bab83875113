#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "ccmc/experiment.hpp"
#include "ccmc/pareto.hpp"

#include <cmath>

using namespace ccmc;

namespace {

ScoredSolution point(long long f, double w) {
    ScoredSolution s;
    s.f = f;
    s.w = w;
    return s;
}

std::vector<std::pair<long long, double>> objectives(const ParetoArchive& archive) {
    std::vector<std::pair<long long, double>> out;
    for (const auto& m : archive.members())
        out.emplace_back(m.f, m.w);
    return out;
}

} // namespace

TEST_CASE("dominance relations") {
    CHECK(weakly_dominates(point(5, 3), point(4, 4)));
    CHECK(weakly_dominates(point(5, 3), point(5, 3)));
    CHECK_FALSE(weakly_dominates(point(5, 3), point(6, 2)));

    CHECK_FALSE(strictly_dominates(point(5, 3), point(5, 3)));
    CHECK(strictly_dominates(point(5, 3), point(5, 4)));

    // a feasible solution strongly dominates an infeasible one
    CHECK(strictly_dominates(point(7, 90.0), point(-1, 200.0)));
    CHECK_FALSE(strictly_dominates(point(-1, 200.0), point(7, 90.0)));
}

TEST_CASE("archive insert follows the set-difference-then-union semantics") {
    ParetoArchive archive;
    CHECK(archive.insert(point(0, 0)));
    CHECK(archive.insert(point(3, 10)));
    CHECK(objectives(archive) ==
          std::vector<std::pair<long long, double>>{{0, 0}, {3, 10}});

    CHECK(archive.insert(point(3, 8))); // replaces the equal-f heavier member
    CHECK(objectives(archive) ==
          std::vector<std::pair<long long, double>>{{0, 0}, {3, 8}});

    CHECK_FALSE(archive.insert(point(2, 9))); // (3,8) strictly dominates
    CHECK(objectives(archive) ==
          std::vector<std::pair<long long, double>>{{0, 0}, {3, 8}});

    CHECK(archive.insert(point(3, 8))); // identical point replaces, still size 2
    CHECK(archive.size() == 2);

    CHECK(archive.insert(point(5, 7))); // sweeps (3,8) away
    CHECK(objectives(archive) ==
          std::vector<std::pair<long long, double>>{{0, 0}, {5, 7}});

    CHECK(test::archive_invariants_hold(archive));
}

TEST_CASE("best_feasible returns the maximal-f member") {
    ParetoArchive archive;
    CHECK_THROWS(archive.best_feasible());
    archive.insert(point(0, 0));
    archive.insert(point(3, 8));
    archive.insert(point(7, 20));
    CHECK(archive.best_feasible().f == 7);
    long long max_f = -2;
    for (const auto& m : archive.members())
        max_f = std::max(max_f, m.f);
    CHECK(archive.best_feasible().f == max_f);
}

TEST_CASE("archive matches pairwise filter over random insertion streams") {
    SplitMix64 rng(808);
    for (int stream = 0; stream < 30; ++stream) {
        ParetoArchive archive;
        std::vector<ScoredSolution> inserted;
        const int inserts = 1 + static_cast<int>(rng.next_below(120));
        for (int i = 0; i < inserts; ++i) {
            const long long f =
                static_cast<long long>(rng.next_below(12)) - 1; // may be -1
            const double w = std::floor(rng.next_unit() * 20.0);
            archive.insert(point(f, w));
            inserted.push_back(point(f, w));
            REQUIRE(test::archive_invariants_hold(archive));
        }
        const auto front = non_dominated_filter(inserted);
        REQUIRE(archive.size() == front.size());
        for (std::size_t i = 0; i < front.size(); ++i) {
            CHECK(archive.members()[i].f == front[i].f);
            CHECK(archive.members()[i].w == front[i].w);
        }
    }
}

TEST_CASE("score applies the infeasibility sentinel") {
    const Graph g = test::complete_graph(3);
    const WeightModel m = make_iid_model(3);
    ChanceEvaluator cheb{EvaluatorKind::Chebyshev, 0.5, &m, nullptr};

    BitVector one(3, 0);
    one[0] = 1;
    const ScoredSolution s = score(one, g, cheb, 9.0);
    CHECK(s.f == 3); // one vertex of K3 covers everything
    CHECK(s.w == doctest::Approx(3.0 + std::sqrt(3.0)));

    // tight bound turns the same selection infeasible
    const ScoredSolution infeasible = score(one, g, cheb, 2.0);
    CHECK(infeasible.f == -1);
    CHECK(infeasible.w == doctest::Approx(3.0 + std::sqrt(3.0)));

    const ScoredSolution empty = score(BitVector(3, 0), g, cheb, 9.0);
    CHECK(empty.f == 0);
    CHECK(empty.w == 0.0);
}

TEST_CASE("cached weight agrees with from-scratch evaluation") {
    SplitMix64 rng(1717);
    const Graph g = test::random_graph(12, 0.3, rng);
    const WeightModel m = make_degree_model(g);
    const SampleMatrix matrix = generate_samples(m, 30, 4);
    for (EvaluatorKind kind :
         {EvaluatorKind::Chebyshev, EvaluatorKind::Chernoff, EvaluatorKind::Sampling}) {
        ChanceEvaluator evaluator{kind, 0.2, &m,
                                  kind == EvaluatorKind::Sampling ? &matrix : nullptr};
        for (int trial = 0; trial < 20; ++trial) {
            const BitVector bits = test::random_bits(12, 0.5, rng);
            const ScoredSolution s = score(bits, g, evaluator, 1e12);
            CHECK(cached_weight(evaluator, s) ==
                  doctest::Approx(evaluator.evaluate(bits)).epsilon(1e-6));
            CHECK(s.cover.covered_total == coverage(g, bits));
        }
    }
}

TEST_CASE("mutation flips the single bit when n = 1") {
    SplitMix64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto flips = mutate(BitVector{0}, rng);
        REQUIRE(flips.size() == 1);
        CHECK(flips[0].index == 0);
        CHECK(flips[0].value == true);
    }
}

TEST_CASE("mutation flip-count statistics") {
    SplitMix64 rng(33);
    const int trials = 100000;

    SUBCASE("no-flip probability at n = 2 is near 0.25") {
        const BitVector parent(2, 0);
        int unchanged = 0;
        for (int i = 0; i < trials; ++i)
            unchanged += mutate(parent, rng).empty();
        const double freq = static_cast<double>(unchanged) / trials;
        CHECK(freq == doctest::Approx(0.25).epsilon(0.05));
    }

    SUBCASE("expected flip count is 1 for larger n") {
        const BitVector parent(20, 0);
        std::size_t total = 0;
        for (int i = 0; i < trials; ++i)
            total += mutate(parent, rng).size();
        const double mean = static_cast<double>(total) / trials;
        CHECK(std::fabs(mean - 1.0) < 0.05);
    }
}
