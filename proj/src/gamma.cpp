#include "koszul/gamma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::VeronesePoint: return "VERONESE_POINT";
        case Classification::NotTwoFull: return "NOT_TWO_FULL";
        case Classification::TwoFullGood: return "TWO_FULL_GOOD";
        case Classification::NonKoszulException: return "NON_KOSZUL_EXCEPTION";
    }
    return "?";
}

std::optional<bool> MembershipTable::lookup(const Point& p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(p);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void MembershipTable::insert(const Point& p, bool value) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(p, value);
}

namespace {

Classification classify(int n, int d, const std::optional<Point>& a) {
    if (!a) return Classification::TwoFullGood;
    std::vector<Coord> s(a->coords());
    std::sort(s.begin(), s.end());
    auto matches = [&](std::vector<Coord> tail) {
        // tail holds the last coordinates of the sorted pattern; the rest are 0.
        if (static_cast<int>(tail.size()) > n) return false;
        std::vector<Coord> pat(static_cast<std::size_t>(n), 0);
        std::copy(tail.begin(), tail.end(), pat.end() - static_cast<long>(tail.size()));
        std::sort(pat.begin(), pat.end());
        return s == pat;
    };
    if (matches({static_cast<Coord>(d)})) return Classification::VeronesePoint;
    // The d >= 3 exceptional pattern comes first: for d = 3 it coincides with
    // the sorted form (0,...,0,1,2), which is the exception, not the merely
    // non-2-full case.
    if (d >= 3 && matches({2, static_cast<Coord>(d - 2)})) return Classification::NonKoszulException;
    if (d != 3 && matches({1, static_cast<Coord>(d - 1)})) return Classification::NotTwoFull;
    return Classification::TwoFullGood;
}

} // namespace

GammaConfig GammaConfig::make(int n, int d, std::optional<Point> puncture) {
    if (n < 2) throw std::invalid_argument("GammaConfig: n must be at least 2");
    if (d < 2) throw std::invalid_argument("GammaConfig: d must be at least 2");
    if (puncture) {
        if (puncture->size() != n) throw std::invalid_argument("GammaConfig: puncture has wrong dimension");
        if (!puncture->is_nonnegative() || puncture->sum() != d)
            throw std::invalid_argument("GammaConfig: puncture is not in the degree-d slice");
    }
    GammaConfig cfg;
    cfg.n_ = n;
    cfg.d_ = d;
    cfg.puncture_ = puncture;
    cfg.cls_ = classify(n, d, puncture);
    if (puncture) {
        auto s = puncture->coords();
        cfg.puncture_unsorted_ = !std::is_sorted(s.begin(), s.end());
    }
    cfg.slice_ = enumerate_points(n, d);
    cfg.generators_.reserve(cfg.slice_.size());
    for (const Point& p : cfg.slice_)
        if (!puncture || p != *puncture) cfg.generators_.push_back(p);
    cfg.table_ = std::make_shared<MembershipTable>();
    cfg.table_full_ = std::make_shared<MembershipTable>();
    return cfg;
}

bool GammaConfig::is_generator(const Point& p) const {
    return std::binary_search(generators_.begin(), generators_.end(), p);
}

bool GammaConfig::in_slice(const Point& p) const {
    return p.size() == n_ && p.is_nonnegative() && p.sum() == d_;
}

bool GammaConfig::member(const Point& lambda, bool use_full_veronese) const {
    if (lambda.size() != n_) throw std::invalid_argument("member: dimension mismatch");
    if (!lambda.is_nonnegative()) throw std::invalid_argument("member: negative coordinate");
    Coord s = lambda.sum();
    if (s % d_ != 0) return false;
    return member_rec(lambda, static_cast<int>(s / d_), use_full_veronese);
}

bool GammaConfig::member_rec(const Point& lambda, int level, bool use_full) const {
    if (level == 0) return lambda.is_zero();
    MembershipTable& table = use_full ? *table_full_ : *table_;
    if (auto hit = table.lookup(lambda)) return *hit;
    const std::vector<Point>& gens = use_full ? slice_ : generators_;
    bool ok = false;
    for (const Point& g : gens) {
        if (!dominated(g, lambda)) continue;
        if (member_rec(lambda - g, level - 1, use_full)) {
            ok = true;
            break;
        }
    }
    table.insert(lambda, ok);
    return ok;
}

int GammaConfig::level_of(const Point& lambda) const {
    Coord s = lambda.sum();
    if (s % d_ != 0)
        throw NotInSemigroupError("level_of: coordinate sum " + std::to_string(s) +
                                  " is not a multiple of " + std::to_string(d_));
    return static_cast<int>(s / d_);
}

std::vector<Point> GammaConfig::level_points(int level, bool use_full_veronese) const {
    if (level < 0) throw std::invalid_argument("level_points: negative level");
    const std::vector<Point>& gens = use_full_veronese ? slice_ : generators_;
    std::set<Point> cur{Point::zero(n_)};
    for (int k = 0; k < level; ++k) {
        std::set<Point> next;
        for (const Point& p : cur)
            for (const Point& g : gens) next.insert(p + g);
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

TwoFullResult is_two_full(const GammaConfig& cfg) {
    std::set<Point> sums;
    const auto& gens = cfg.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) sums.insert(gens[i] + gens[j]);
    TwoFullResult r;
    for (const Point& p : enumerate_points(cfg.n(), 2 * cfg.d()))
        if (!sums.count(p)) r.missing.push_back(p);
    r.two_full = r.missing.empty();
    return r;
}

} // namespace koszul
