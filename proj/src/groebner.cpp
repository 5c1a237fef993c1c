#include "koszul/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "koszul/chains.hpp"
#include "koszul/errors.hpp"

namespace koszul {

Monomial::Monomial(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

Monomial::Monomial(const GammaConfig& cfg, std::vector<Point> points)
    : Monomial(std::move(points)) {
    for (const Point& p : points_) {
        if (!cfg.in_slice(p) || (cfg.puncture() && p == *cfg.puncture()))
            throw std::invalid_argument("Monomial: " + p.to_string() + " is not a generator");
    }
}

Point Monomial::point_sum(int n) const {
    Point s(std::vector<Coord>(static_cast<std::size_t>(n), 0));
    for (const Point& p : points_) s = s + p;
    return s;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const Point& p : points_) s += p.to_string();
    return s.empty() ? "1" : s;
}

std::strong_ordering monomial_compare(const Monomial& m1, const Monomial& m2) {
    if (m1.degree() != m2.degree())
        throw std::invalid_argument("monomial_compare: degree mismatch");
    return m1.points() <=> m2.points();
}

std::vector<RewriteRule> build_quadratic_basis(const GammaConfig& cfg) {
    const auto& gens = cfg.generators();
    const Point origin(std::vector<Coord>(static_cast<std::size_t>(cfg.n()), 0));
    std::vector<RewriteRule> rules;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            Chain best = minimal_chain(cfg, origin, gens[i] + gens[j]);
            if (best.links() == std::vector<Point>{gens[i], gens[j]}) continue;
            if (best.a_degree() != 0)
                throw SelfCheckError("quadratic basis: minimal chain of " + gens[i].to_string() +
                                     gens[j].to_string() + " passes through the puncture");
            RewriteRule rule{Monomial({gens[i], gens[j]}), Monomial(best.links())};
            if (rule.lhs.point_sum(cfg.n()) != rule.rhs.point_sum(cfg.n()))
                throw SelfCheckError("quadratic basis: point-sum not conserved at " +
                                     rule.lhs.to_string());
            if (monomial_compare(rule.rhs, rule.lhs) != std::strong_ordering::less)
                throw SelfCheckError("quadratic basis: rhs not smaller at " + rule.lhs.to_string());
            rules.push_back(std::move(rule));
        }
    }
    return rules;
}

namespace {

using PairKey = std::pair<Point, Point>;

std::map<PairKey, PairKey> rule_map(const std::vector<RewriteRule>& rules) {
    std::map<PairKey, PairKey> m;
    for (const RewriteRule& r : rules)
        m.emplace(PairKey{r.lhs.points()[0], r.lhs.points()[1]},
                  PairKey{r.rhs.points()[0], r.rhs.points()[1]});
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> reducible_pairs(
    const Monomial& m, const std::map<PairKey, PairKey>& rules) {
    const auto& pts = m.points();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (rules.count({pts[i], pts[j]})) out.push_back({i, j});
    return out;
}

NormalFormResult reduce(Monomial m, const std::vector<RewriteRule>& rules,
                        std::mt19937_64* rng) {
    const auto map = rule_map(rules);
    std::vector<RewriteStep> trace;
    for (;;) {
        auto pairs = reducible_pairs(m, map);
        if (pairs.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(*rng);
        auto [i, j] = pairs[pick];
        PairKey lhs{m.points()[i], m.points()[j]};
        const PairKey& rhs = map.at(lhs);
        std::vector<Point> next = m.points();
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        next.push_back(rhs.first);
        next.push_back(rhs.second);
        Monomial reduced(std::move(next));
        if (monomial_compare(reduced, m) != std::strong_ordering::less)
            throw SelfCheckError("normal_form: step did not decrease the monomial order at " +
                                 m.to_string());
        trace.push_back({RewriteRule{Monomial({lhs.first, lhs.second}),
                                     Monomial({rhs.first, rhs.second})},
                         reduced});
        m = std::move(reduced);
    }
    return {std::move(m), std::move(trace)};
}

} // namespace

NormalFormResult normal_form(Monomial m, const std::vector<RewriteRule>& rules) {
    return reduce(std::move(m), rules, nullptr);
}

NormalFormResult normal_form_randomized(Monomial m, const std::vector<RewriteRule>& rules,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return reduce(std::move(m), rules, &rng);
}

GroebnerReport verify_groebner(const GammaConfig& cfg) {
    GroebnerReport report;
    auto rules = build_quadratic_basis(cfg);
    report.rule_count = rules.size();
    const auto& gens = cfg.generators();
    const Point origin(std::vector<Coord>(static_cast<std::size_t>(cfg.n()), 0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            for (std::size_t k = j; k < gens.size(); ++k) {
                ++report.cubics_checked;
                Monomial cubic({gens[i], gens[j], gens[k]});
                auto nf = normal_form(cubic, rules);
                Chain best = minimal_chain(cfg, origin, gens[i] + gens[j] + gens[k]);
                if (best.a_degree() != 0)
                    throw SelfCheckError("verify_groebner: minimal chain of " + cubic.to_string() +
                                         " passes through the puncture");
                Monomial target(best.links());
                if (nf.result == target) continue;
                report.counterexamples.push_back(
                    {std::move(cubic), nf.result, std::move(target), std::move(nf.trace)});
            }
        }
    }
    report.is_groebner = report.counterexamples.empty();
    return report;
}

} // namespace koszul
