#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "koszul/gamma.hpp"
#include "koszul/point.hpp"

namespace koszul {

// A commutative monomial in the semigroup variables, stored as the ascending
// multiset of its points. Degree-graded; comparisons are defined only within
// a fixed degree.
class Monomial {
  public:
    // Sorts the points; does not check membership.
    explicit Monomial(std::vector<Point> points);
    // Sorts and checks that every point is a generator of cfg.
    Monomial(const GammaConfig& cfg, std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    int degree() const { return static_cast<int>(points_.size()); }
    Point point_sum(int n) const;
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<Point> points_;
};

// Graded reverse lexicographic order, with the variable of point p declared
// greater than the variable of q exactly when p > q in Point lex order.
// Within one degree this amounts to comparing the ascending point sequences
// from the smallest end: the first difference decides, smaller point first.
// On squarefree degree-k monomials with no puncture factor it agrees with
// chain_compare on the corresponding ascending chains. Throws on degree
// mismatch.
std::strong_ordering monomial_compare(const Monomial& m1, const Monomial& m2);

// xy -> min(xy) for a non-minimal pair xy. rhs is always strictly smaller and
// has the same point-sum.
struct RewriteRule {
    Monomial lhs;
    Monomial rhs;
};

// One rule for every unordered generator pair (with repetition) whose
// ascending 2-link chain is non-minimal, sorted ascending by lhs.
// Self-checks on every rule: point-sum conservation, rhs strictly smaller,
// and no puncture appearing in the rhs (the minimal chain of a pair of
// generators never needs the puncture; checked, not assumed).
std::vector<RewriteRule> build_quadratic_basis(const GammaConfig& cfg);

struct RewriteStep {
    RewriteRule applied;
    Monomial result; // the whole monomial right after the step
};

struct NormalFormResult {
    Monomial result;
    std::vector<RewriteStep> trace;
};

// Repeatedly replaces a reducible pair inside m (a pair matching some rule
// lhs) until none remains. Each step strictly decreases the monomial order,
// so this terminates; the fixed point has every internal pair minimal.
// Deterministic: always rewrites the first reducible pair in position order.
NormalFormResult normal_form(Monomial m, const std::vector<RewriteRule>& rules);

// Same fixed-point contract, but picks a uniformly random reducible pair at
// each step. Used to test confluence: for a Groebner configuration the
// result must not depend on the order of reductions.
NormalFormResult normal_form_randomized(Monomial m, const std::vector<RewriteRule>& rules,
                                        std::uint64_t seed);

struct GroebnerCounterexample {
    Monomial cubic;
    Monomial normal_form;  // the fixed point the rules reach
    Monomial true_minimal; // ascending links of the genuinely minimal chain
    std::vector<RewriteStep> trace;
};

struct GroebnerReport {
    bool is_groebner = false;
    std::vector<GroebnerCounterexample> counterexamples; // ascending by cubic
    std::size_t rule_count = 0;
    std::size_t cubics_checked = 0;
};

// Exhaustive cubic confluence check: for every degree-3 monomial over the
// generators, the rewriting fixed point must equal the ascending arrangement
// of the minimal chain of its point-sum.
GroebnerReport verify_groebner(const GammaConfig& cfg);

} // namespace koszul
