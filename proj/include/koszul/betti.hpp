#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "koszul/gamma.hpp"
#include "koszul/point.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

// Squarefree divisor complex of lambda: vertices are the generators g with
// lambda - g in the semigroup, and a set F of generators is a face exactly
// when lambda minus the sum of F stays in the semigroup. Vertices are
// labeled by their points. Throws NotInSemigroupError when lambda is not a
// semigroup member.
SimplicialComplex divisor_complex(const GammaConfig& cfg, const Point& lambda);

// Order complex of the open interval (0, lambda) in the divisibility order
// of the punctured semigroup (or the full Veronese one when flagged):
// vertices are the interior points mu with both mu and lambda - mu members;
// faces are chains mu_1 < mu_2 < ... with every consecutive difference a
// member. Built from the maximal chains found by search, so it is correct
// even where the purity claim fails. Throws NotInSemigroupError when lambda
// is not a member of the chosen semigroup.
SimplicialComplex order_complex(const GammaConfig& cfg, const Point& lambda,
                                bool use_full_veronese);

// Multigraded Betti number of the toric ideal: rank of reduced H_i of the
// divisor complex, over the rationals.
std::size_t betti_ideal(const GammaConfig& cfg, const Point& lambda, int i);

// Multigraded Betti number of the residue field: rank of reduced H_{i-2} of
// the order complex, over the rationals. Requires i >= 0.
std::size_t betti_field(const GammaConfig& cfg, const Point& lambda, int i);

struct BettiEntry {
    int i = 0;
    Point lambda;
    std::size_t rank = 0;
    int degree = 0; // |lambda| = coordinate sum / d
    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct ScanOptions {
    int jobs = 1;
    // Also compute every profile over GF(2) and GF(32003) and record
    // disagreements with the rational ranks.
    bool cross_check_fields = false;
    // Called after each lambda with (done, total); used for progress output.
    std::function<void(std::size_t, std::size_t)> progress;
};

struct BettiReport {
    int max_degree = 0;
    // Nonzero beta_{i,lambda} over the rationals, sorted by (degree, lambda, i).
    std::vector<BettiEntry> entries;
    // Entries off the linear strand: degree > i. Koszulness at desk scale
    // means this list is empty.
    std::vector<BettiEntry> violations;
    // max over entries of degree - i (the regularity statistic); 0 when no
    // entries exist.
    int regularity = 0;
    std::size_t lambdas_scanned = 0;
    // Order complexes whose maximal chains do not all have the full length
    // |lambda| - 1 (purity failures; expected empty).
    std::vector<Point> purity_failures;
    // Lambdas where a prime-field rank differed from the rational one (only
    // populated when cross_check_fields was set; expected empty).
    std::vector<Point> field_disagreements;
};

// Scans every semigroup member lambda with 1 <= |lambda| <= max_degree,
// computing the reduced homology of its order complex and translating
// nonzero ranks into Betti entries (i = homology dimension + 2). Purity of
// every order complex is checked as part of the scan. Deterministic output
// for a fixed configuration regardless of the jobs count.
BettiReport koszul_scan(const GammaConfig& cfg, int max_degree, const ScanOptions& opts = {});

} // namespace koszul
