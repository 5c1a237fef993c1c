#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "koszul/betti.hpp"
#include "koszul/errors.hpp"
#include "koszul/gamma.hpp"
#include "koszul/point.hpp"
#include "koszul/simplicial.hpp"

using namespace koszul;

namespace {
Point pt(std::vector<Coord> v) { return Point(std::move(v)); }
GammaConfig cfg(int n, int d, std::vector<Coord> a) { return GammaConfig::make(n, d, pt(std::move(a))); }
} // namespace

TEST_CASE("divisor complex: pinned instances") {
    auto c24 = cfg(2, 4, {2, 2});
    auto D = divisor_complex(c24, pt({3, 9}));
    CHECK(D.labels() == std::vector<Point>{pt({0, 4}), pt({1, 3}), pt({3, 1})});
    CHECK(D.facets() == std::vector<Face>{{0, 2}, {1}});
    CHECK(reduced_homology_ranks(D, FieldDescriptor::rationals()).rank(0) == 1);

    auto single = divisor_complex(c24, pt({0, 4}));
    CHECK(single.labels() == std::vector<Point>{pt({0, 4})});
    CHECK(single.facets() == std::vector<Face>{{0}});

    auto c22 = cfg(2, 2, {1, 1});
    auto edge = divisor_complex(c22, pt({2, 2}));
    CHECK(edge.labels() == std::vector<Point>{pt({0, 2}), pt({2, 0})});
    CHECK(edge.facets() == std::vector<Face>{{0, 1}});
    CHECK(reduced_homology_ranks(edge, FieldDescriptor::rationals()).rank(0) == 0);

    CHECK_THROWS_AS(divisor_complex(c22, pt({1, 1})), NotInSemigroupError);
    CHECK_THROWS_AS(divisor_complex(c22, pt({1, 2})), NotInSemigroupError);
}

TEST_CASE("betti_ideal: pinned values and quadraticity at degree three") {
    auto c24 = cfg(2, 4, {2, 2});
    CHECK(betti_ideal(c24, pt({3, 9}), 0) == 1);
    CHECK(betti_ideal(c24, pt({0, 4}), 0) == 0);
    CHECK(betti_ideal(c24, pt({0, 4}), 1) == 0);

    // Near-vertex punctures with d in {2,4,5}: every degree-3 divisor
    // complex is connected, so the ideal needs no cubic generators.
    for (const auto& c : {cfg(2, 2, {1, 1}), cfg(2, 4, {1, 3}), cfg(2, 5, {1, 4}),
                          cfg(3, 2, {0, 1, 1}), cfg(3, 4, {0, 1, 3}), cfg(3, 5, {0, 1, 4}),
                          cfg(3, 3, {1, 1, 1})}) {
        for (const Point& lambda : c.level_points(3, false)) {
            CAPTURE(lambda.to_string());
            CHECK(betti_ideal(c, lambda, 0) == 0);
        }
    }
}

TEST_CASE("order complex: pinned instances") {
    auto c24 = cfg(2, 4, {2, 2});
    auto G = order_complex(c24, pt({3, 9}), false);
    CHECK(G.labels() == std::vector<Point>{pt({0, 4}), pt({1, 3}), pt({3, 1}), pt({0, 8}),
                                           pt({2, 6}), pt({3, 5})});
    CHECK(G.facets() == std::vector<Face>{{0, 3}, {0, 5}, {1, 4}, {2, 5}});
    CHECK(G.pure());
    CHECK(G.dim() == 1);
    auto h = reduced_homology_ranks(G, FieldDescriptor::rationals());
    CHECK(h.rank(0) == 1); // two connected components
    CHECK(h.rank(1) == 0);

    CHECK(order_complex(c24, pt({0, 4}), false).is_empty());

    auto c22 = cfg(2, 2, {1, 1});
    auto two = order_complex(c22, pt({2, 2}), false);
    CHECK(two.labels() == std::vector<Point>{pt({0, 2}), pt({2, 0})});
    CHECK(two.facets() == std::vector<Face>{{0}, {1}});

    // The full-Veronese variant sees the puncture as a vertex.
    auto full = order_complex(c22, pt({2, 2}), true);
    CHECK(full.labels() == std::vector<Point>{pt({0, 2}), pt({1, 1}), pt({2, 0})});
    CHECK(full.facets() == std::vector<Face>{{0}, {1}, {2}});

    auto c33 = cfg(3, 3, {1, 1, 1});
    auto twoA = order_complex(c33, pt({2, 2, 2}), false);
    CHECK(twoA.vertex_count() == 6);
    CHECK(twoA.dim() == 0);
    CHECK(reduced_homology_ranks(twoA, FieldDescriptor::rationals()).rank(0) == 5);

    CHECK_THROWS_AS(order_complex(c22, pt({1, 1}), false), NotInSemigroupError);
    CHECK(order_complex(c22, pt({1, 1}), true).is_empty());
}

TEST_CASE("betti_field: pinned values") {
    auto c22 = cfg(2, 2, {1, 1});
    CHECK(betti_field(c22, pt({2, 2}), 2) == 1);
    CHECK(betti_field(c22, pt({0, 2}), 1) == 1);

    auto c24 = cfg(2, 4, {2, 2});
    CHECK(betti_field(c24, pt({3, 9}), 2) == 1); // degree 3 at i = 2: non-Koszul witness
    CHECK(betti_field(c24, pt({0, 4}), 1) == 1);
    CHECK(betti_field(c24, pt({0, 8}), 2) == 0);

    auto c33 = cfg(3, 3, {1, 1, 1});
    CHECK(betti_field(c33, pt({2, 2, 2}), 2) == 5);

    CHECK_THROWS_AS(betti_field(c22, pt({2, 2}), -1), std::invalid_argument);
}

TEST_CASE("koszul_scan: non-Koszul witness at degree 3 for the exceptional puncture") {
    auto c24 = cfg(2, 4, {2, 2});
    auto report = koszul_scan(c24, 3);
    REQUIRE(report.violations.size() == 3);
    CHECK(report.violations[0] == BettiEntry{2, pt({3, 9}), 1, 3});
    CHECK(report.violations[1] == BettiEntry{2, pt({6, 6}), 1, 3});
    CHECK(report.violations[2] == BettiEntry{2, pt({9, 3}), 1, 3});
    CHECK(report.regularity == 1);
    CHECK(report.purity_failures.empty());
    CHECK(report.max_degree == 3);
    // Every generator contributes the linear entry (1, g).
    std::size_t linear = 0;
    for (const auto& e : report.entries)
        if (e.i == 1) {
            CHECK(e.degree == 1);
            CHECK(e.rank == 1);
            ++linear;
        }
    CHECK(linear == c24.generators().size());
}

TEST_CASE("koszul_scan: Koszul configurations stay on the linear strand") {
    for (const auto& c : {cfg(2, 2, {1, 1}), cfg(2, 4, {1, 3}), cfg(2, 4, {0, 4}),
                          cfg(3, 2, {0, 1, 1})}) {
        auto report = koszul_scan(c, 4);
        CAPTURE(c.d());
        CHECK(report.violations.empty());
        CHECK(report.regularity == 0);
        CHECK(report.purity_failures.empty());
        for (const auto& e : report.entries) CHECK(e.i == e.degree);
    }

    auto c33 = cfg(3, 3, {1, 1, 1});
    auto report = koszul_scan(c33, 3);
    CHECK(report.violations.empty());
    CHECK(report.regularity == 0);
    CHECK(report.purity_failures.empty());
    CHECK(report.lambdas_scanned == 92); // 9 + 28 + 55 semigroup members
}

TEST_CASE("koszul_scan: deterministic under parallelism, progress and cross-checks work") {
    auto c24 = cfg(2, 4, {2, 2});
    auto serial = koszul_scan(c24, 3);
    ScanOptions opts;
    opts.jobs = 3;
    opts.cross_check_fields = true;
    std::size_t calls = 0, last_done = 0, last_total = 0;
    opts.progress = [&](std::size_t done, std::size_t total) {
        ++calls;
        last_done = done;
        last_total = total;
    };
    auto parallel = koszul_scan(c24, 3, opts);
    CHECK(parallel.entries == serial.entries);
    CHECK(parallel.violations == serial.violations);
    CHECK(parallel.field_disagreements.empty());
    CHECK(calls == serial.lambdas_scanned);
    CHECK(last_done == last_total);
    CHECK(last_total == serial.lambdas_scanned);

    CHECK_THROWS_AS(koszul_scan(c24, 0), std::invalid_argument);
}

TEST_CASE("full Veronese order complexes have homology only in the top dimension") {
    for (const auto& c : {cfg(2, 4, {2, 2}), cfg(3, 3, {1, 1, 1})}) {
        for (int level = 1; level <= 3; ++level) {
            for (const Point& lambda : c.level_points(level, true)) {
                auto delta = order_complex(c, lambda, true);
                CHECK(delta.pure());
                CHECK(delta.dim() == level - 2);
                auto h = reduced_homology_ranks(delta, FieldDescriptor::rationals());
                for (int j = -1; j < level - 2; ++j) {
                    CAPTURE(lambda.to_string());
                    CHECK(h.rank(j) == 0);
                }
            }
        }
    }
}
