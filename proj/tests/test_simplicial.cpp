#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "koszul/errors.hpp"
#include "koszul/simplicial.hpp"

using namespace koszul;

namespace {

SimplicialComplex make(int n, std::vector<Face> facets) {
    return SimplicialComplex::from_facets(n, std::move(facets));
}

// Dense Gaussian elimination over exact rationals, as an independent rank
// reference.
std::size_t dense_rank(const SparseIntMatrix& M) {
    using Rat = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Rat>> a(M.rows, std::vector<Rat>(M.cols, 0));
    for (std::size_t c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) a[r][c] = v;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::size_t piv = rank;
        while (piv < M.rows && a[piv][col] == 0) ++piv;
        if (piv == M.rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < M.cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

SparseIntMatrix from_dense(std::vector<std::vector<std::int64_t>> rows) {
    SparseIntMatrix M;
    M.rows = rows.size();
    M.cols = rows.empty() ? 0 : rows[0].size();
    M.columns.resize(M.cols);
    for (std::size_t r = 0; r < M.rows; ++r)
        for (std::size_t c = 0; c < M.cols; ++c)
            if (rows[r][c] != 0) M.columns[c].push_back({r, rows[r][c]});
    return M;
}

} // namespace

TEST_CASE("void and empty complexes are distinct and minimal") {
    auto void_k = SimplicialComplex::void_complex();
    CHECK(void_k.is_void());
    CHECK_FALSE(void_k.is_empty());
    CHECK(void_k.dim() == -2);
    CHECK(void_k.total_face_count() == 0);
    CHECK(void_k.face_count(-1) == 0);

    auto empty_k = SimplicialComplex::empty_complex();
    CHECK_FALSE(empty_k.is_void());
    CHECK(empty_k.is_empty());
    CHECK(empty_k.dim() == -1);
    CHECK(empty_k.total_face_count() == 1);
    CHECK(empty_k.face_count(-1) == 1);
    CHECK(empty_k.face_count(0) == 0);
}

TEST_CASE("facet normalization: nesting absorbed, faces enumerated and sorted") {
    auto K = make(4, {{2, 0}, {0}, {1, 3}, {3}});
    CHECK(K.facets() == std::vector<Face>{{0, 2}, {1, 3}});
    CHECK(K.dim() == 1);
    CHECK(K.pure());
    CHECK(K.face_count(-1) == 1);
    CHECK(K.face_count(0) == 4);
    CHECK(K.face_count(1) == 2);
    CHECK(K.faces_of_dim(0) == std::vector<Face>{{0}, {1}, {2}, {3}});

    auto mixed = make(3, {{0, 1}, {2}});
    CHECK_FALSE(mixed.pure());
    CHECK(mixed.dim() == 1);

    CHECK_THROWS_AS(make(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(-1, {}), std::invalid_argument);
}

TEST_CASE("boundary matrices: signs, augmentation, edge shapes") {
    auto triangle = make(3, {{0, 1, 2}});
    auto d2 = boundary_matrix(triangle, 2);
    REQUIRE(d2.rows == 3);
    REQUIRE(d2.cols == 1);
    // Rows are the sorted edges {0,1},{0,2},{1,2}; dropping vertex j of
    // {0,1,2} carries sign (-1)^j.
    CHECK(d2.columns[0] ==
          std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}, {1, -1}, {2, 1}});

    auto d0 = boundary_matrix(triangle, 0);
    REQUIRE(d0.rows == 1);
    REQUIRE(d0.cols == 3);
    for (const auto& col : d0.columns)
        CHECK(col == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}});

    auto hollow = make(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(exact_rank(boundary_matrix(hollow, 1), FieldDescriptor::rationals()) == 2);
    CHECK(exact_rank(boundary_matrix(hollow, 1), FieldDescriptor::prime(2)) == 2);

    auto empty_k = SimplicialComplex::empty_complex();
    CHECK(boundary_matrix(empty_k, 0).cols == 0);
    CHECK(boundary_matrix(empty_k, 1).cols == 0);
    CHECK(boundary_matrix(triangle, 3).cols == 0);
    CHECK(boundary_matrix(triangle, -1).rows == 0);
}

TEST_CASE("exact_rank on pinned matrices") {
    CHECK(exact_rank(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), FieldDescriptor::rationals()) ==
          3);
    CHECK(exact_rank(from_dense({{0, 0}, {0, 0}, {0, 0}, {0, 0}}), FieldDescriptor::rationals()) ==
          0);
    CHECK(exact_rank(from_dense({{1, 2}, {2, 4}}), FieldDescriptor::rationals()) == 1);
    // Rank collapses in characteristic 2 but not over the rationals.
    auto twos = from_dense({{2, 0}, {0, 3}});
    CHECK(exact_rank(twos, FieldDescriptor::rationals()) == 2);
    CHECK(exact_rank(twos, FieldDescriptor::prime(2)) == 1);

    CHECK_THROWS_AS(FieldDescriptor::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldDescriptor::prime(1), std::invalid_argument);
    CHECK(FieldDescriptor::prime(32003).to_string() == "p:32003");
    CHECK(FieldDescriptor::rationals().to_string() == "q");
}

TEST_CASE("exact_rank agrees with dense rational elimination on random matrices") {
    std::mt19937 rng(20250819);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<std::int64_t>> rows(size(rng),
                                                    std::vector<std::int64_t>(size(rng), 0));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        auto M = from_dense(rows);
        std::size_t reference = dense_rank(M);
        CHECK(exact_rank(M, FieldDescriptor::rationals()) == reference);
        // Entries are at most 3 in absolute value and minors at most 6x6, so
        // by the Hadamard bound no nonzero minor can vanish modulo 1000003:
        // the mod-p rank must agree exactly.
        CHECK(exact_rank(M, FieldDescriptor::prime(1000003)) == reference);
        CHECK(exact_rank(M, FieldDescriptor::prime(2)) <= reference);
    }
}

TEST_CASE("reduced homology of pinned complexes") {
    auto q = FieldDescriptor::rationals();

    auto hollow = make(3, {{0, 1}, {0, 2}, {1, 2}});
    auto h = reduced_homology_ranks(hollow, q);
    CHECK(h.rank(-1) == 0);
    CHECK(h.rank(0) == 0);
    CHECK(h.rank(1) == 1);

    auto two_points = make(2, {{0}, {1}});
    CHECK(reduced_homology_ranks(two_points, q).rank(0) == 1);
    CHECK(reduced_homology_ranks(two_points, q).rank(-1) == 0);

    CHECK(reduced_homology_ranks(SimplicialComplex::empty_complex(), q).rank(-1) == 1);
    CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(), q).ranks.empty());

    auto solid = make(4, {{0, 1, 2, 3}});
    for (int i = -1; i <= 2; ++i) CHECK(reduced_homology_ranks(solid, q).rank(i) == 0);

    auto sphere = make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto hs = reduced_homology_ranks(sphere, q);
    CHECK(hs.rank(0) == 0);
    CHECK(hs.rank(1) == 0);
    CHECK(hs.rank(2) == 1);

    auto circle_and_point = make(4, {{0, 1}, {1, 2}, {0, 2}, {3}});
    auto hc = reduced_homology_ranks(circle_and_point, q);
    CHECK(hc.rank(0) == 1);
    CHECK(hc.rank(1) == 1);
}

TEST_CASE("projective plane: rational and GF(2) homology legitimately differ") {
    // Minimal 6-vertex triangulation; 10 triangles, every edge in exactly two.
    auto rp2 = make(6, {{0, 1, 2},
                        {0, 2, 3},
                        {0, 3, 4},
                        {0, 4, 5},
                        {0, 1, 5},
                        {1, 2, 4},
                        {2, 3, 5},
                        {1, 3, 4},
                        {2, 4, 5},
                        {1, 3, 5}});
    CHECK(rp2.face_count(0) == 6);
    CHECK(rp2.face_count(1) == 15);
    CHECK(rp2.face_count(2) == 10);

    auto over_q = reduced_homology_ranks(rp2, FieldDescriptor::rationals());
    CHECK(over_q.rank(0) == 0);
    CHECK(over_q.rank(1) == 0);
    CHECK(over_q.rank(2) == 0);

    auto over_2 = reduced_homology_ranks(rp2, FieldDescriptor::prime(2));
    CHECK(over_2.rank(1) == 1);
    CHECK(over_2.rank(2) == 1);

    auto over_3 = reduced_homology_ranks(rp2, FieldDescriptor::prime(3));
    CHECK(over_3.ranks == over_q.ranks);

    reset_self_check_stats();
    auto crossed = reduced_homology_cross_checked(rp2);
    CHECK(crossed.rational.ranks == over_q.ranks);
    CHECK_FALSE(crossed.fields_agree);
    auto stats = self_check_stats();
    CHECK(stats.complexes == 3);
    CHECK(stats.field_cross_checks == 2);
    CHECK(stats.field_disagreements == 1); // GF(2) differs, GF(32003) agrees
    CHECK(stats.boundary_square_checks > 0);
    CHECK(stats.euler_checks == 3);
}

TEST_CASE("cross-checked homology agrees on torsion-free complexes") {
    reset_self_check_stats();
    for (auto& K : {make(3, {{0, 1}, {0, 2}, {1, 2}}),
                    make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
                    make(5, {{0, 1}, {1, 2}, {2, 0}, {3}, {4}}),
                    SimplicialComplex::empty_complex()}) {
        auto crossed = reduced_homology_cross_checked(K);
        CHECK(crossed.fields_agree);
    }
    CHECK(self_check_stats().field_disagreements == 0);
    CHECK(self_check_stats().field_cross_checks == 8);
    CHECK(self_check_stats().complexes == 12);
}
