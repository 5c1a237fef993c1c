#include "koszul/chains.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

Chain::Chain(const GammaConfig& cfg, Point start, std::vector<Point> links)
    : start_(std::move(start)), links_(std::move(links)) {
    if (start_.size() != cfg.n() || !start_.is_nonnegative())
        throw std::invalid_argument("Chain: bad start point");
    end_ = start_;
    for (const Point& l : links_) {
        if (!cfg.in_slice(l)) throw std::invalid_argument("Chain: link " + l.to_string() + " is not in the slice");
        end_ = end_ + l;
        if (cfg.puncture() && l == *cfg.puncture()) ++a_degree_;
    }
}

std::vector<Point> Chain::interior_nodes() const {
    std::vector<Point> nodes;
    Point cur = start_;
    for (std::size_t i = 0; i + 1 < links_.size(); ++i) {
        cur = cur + links_[i];
        nodes.push_back(cur);
    }
    return nodes;
}

std::string Chain::to_string() const {
    std::string s;
    for (const Point& l : links_) s += l.to_string();
    return s.empty() ? "()" : s;
}

std::strong_ordering chain_compare(const Chain& x, const Chain& y) {
    if (x.start() != y.start() || x.end() != y.end())
        throw std::invalid_argument("chain_compare: chains do not share endpoints");
    if (auto c = x.a_degree() <=> y.a_degree(); c != 0) return c;
    return x.links() <=> y.links();
}

std::optional<Point> min_below_bruteforce(const GammaConfig& cfg, const Point& m,
                                          bool use_full_veronese) {
    const auto& pool = use_full_veronese ? cfg.slice() : cfg.generators();
    for (const Point& g : pool)
        if (dominated(g, m)) return g;
    return std::nullopt;
}

namespace {

std::optional<Point> min_below_closed_form(const GammaConfig& cfg, const Point& m,
                                           bool use_full_veronese) {
    const int n = cfg.n();
    const Coord d = cfg.d();
    // tail(i) = m_i + ... + m_{n-1}
    std::vector<Coord> tail(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) tail[i] = tail[i + 1] + m[i];
    if (tail[0] < d) return std::nullopt;
    int i = n - 1;
    while (tail[i] < d) --i; // exists: tail[0] >= d
    const Coord si = d - tail[i + 1];
    std::vector<Coord> s(static_cast<std::size_t>(n), 0);
    s[static_cast<std::size_t>(i)] = si;
    for (int j = i + 1; j < n; ++j) s[static_cast<std::size_t>(j)] = m[j];
    Point smin(std::move(s));
    if (use_full_veronese || !cfg.puncture() || smin != *cfg.puncture()) return smin;
    // The least slice point below m is the puncture; move to its lex
    // successor within the restriction. Bumping position i needs headroom at
    // i and at least one positive coordinate afterwards to give the unit back.
    if (m[i] > si && tail[i + 1] >= 1) {
        int jstar = i + 1;
        while (m[jstar] == 0) ++jstar;
        std::vector<Coord> x(smin.coords());
        x[static_cast<std::size_t>(i)] += 1;
        x[static_cast<std::size_t>(jstar)] -= 1;
        return Point(std::move(x));
    }
    // Otherwise borrow: put a unit at the last positive position before i.
    int t = i - 1;
    while (t >= 0 && m[t] == 0) --t;
    if (t < 0) return std::nullopt; // restriction was exactly {puncture}
    std::vector<Coord> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(t)] = 1;
    x[static_cast<std::size_t>(i)] = si - 1;
    for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(j)] = m[j];
    return Point(std::move(x));
}

} // namespace

std::optional<Point> min_below(const GammaConfig& cfg, const Point& m, bool use_full_veronese) {
    if (m.size() != cfg.n()) throw std::invalid_argument("min_below: dimension mismatch");
    if (!m.is_nonnegative()) throw std::invalid_argument("min_below: negative coordinate");
    auto r = min_below_closed_form(cfg, m, use_full_veronese);
#ifndef NDEBUG
    if (r != min_below_bruteforce(cfg, m, use_full_veronese))
        throw SelfCheckError("min_below closed form disagrees with brute force at m=" + m.to_string());
#endif
    return r;
}

std::vector<Chain> enumerate_chains(const GammaConfig& cfg, const Point& start, const Point& end,
                                    bool links_in_gamma_only, int max_links) {
    Point m = end - start;
    if (!m.is_nonnegative()) throw std::invalid_argument("enumerate_chains: start does not divide end");
    if (m.sum() % cfg.d() != 0) return {};
    const int k = static_cast<int>(m.sum() / cfg.d());
    if (k > max_links)
        throw LimitExceededError("enumerate_chains: " + std::to_string(k) + " links exceeds cap " +
                                 std::to_string(max_links));
    const auto& pool = links_in_gamma_only ? cfg.generators() : cfg.slice();
    std::vector<Chain> out;
    std::vector<Point> prefix;
    std::function<void(const Point&)> rec = [&](const Point& left) {
        if (static_cast<int>(prefix.size()) == k) {
            if (left.is_zero()) out.emplace_back(cfg, start, prefix);
            return;
        }
        for (const Point& g : pool) {
            if (!dominated(g, left)) continue;
            prefix.push_back(g);
            rec(left - g);
            prefix.pop_back();
        }
    };
    rec(m);
    std::sort(out.begin(), out.end(),
              [](const Chain& a, const Chain& b) { return chain_compare(a, b) < 0; });
    return out;
}

namespace {

// Can m' still be written with exactly j puncture links among k' links total?
bool completable(const GammaConfig& cfg, const Point& m, int k, int j) {
    if (j < 0 || j > k) return false;
    Point rest = m;
    if (j > 0) {
        const Point& a = *cfg.puncture();
        for (int t = 0; t < j; ++t) rest = rest - a;
        if (!rest.is_nonnegative()) return false;
    }
    return cfg.member(rest); // level k - j by construction
}

} // namespace

Chain minimal_chain(const GammaConfig& cfg, const Point& start, const Point& end) {
    Point m = end - start;
    if (!m.is_nonnegative()) throw std::invalid_argument("minimal_chain: start does not divide end");
    if (m.sum() % cfg.d() != 0)
        throw NotInSemigroupError("minimal_chain: no chain from " + start.to_string() + " to " +
                                  end.to_string());
    const int k = static_cast<int>(m.sum() / cfg.d());
    int delta = -1;
    for (int j = 0; j <= k; ++j) {
        if (completable(cfg, m, k, j)) {
            delta = j;
            break;
        }
    }
    if (delta < 0)
        throw NotInSemigroupError("minimal_chain: no chain from " + start.to_string() + " to " +
                                  end.to_string());
    std::vector<Point> links;
    Point cur = m;
    int j = delta;
    for (int pos = k; pos >= 1; --pos) {
        bool found = false;
        for (const Point& z : cfg.slice()) {
            if (!dominated(z, cur)) continue;
            const bool is_a = cfg.puncture() && z == *cfg.puncture();
            if (!completable(cfg, cur - z, pos - 1, is_a ? j - 1 : j)) continue;
            links.push_back(z);
            cur = cur - z;
            if (is_a) --j;
            found = true;
            break;
        }
        assert(found);
        if (!found) throw SelfCheckError("minimal_chain: greedy step found no link");
    }
    return Chain(cfg, start, std::move(links));
}

Chain minimal_chain_baseline(const GammaConfig& cfg, const Point& start, const Point& end,
                             int max_links) {
    auto all = enumerate_chains(cfg, start, end, false, max_links);
    if (all.empty())
        throw NotInSemigroupError("minimal_chain: no chain from " + start.to_string() + " to " +
                                  end.to_string());
    return all.front(); // enumerate_chains sorts ascending
}

bool is_minimal(const GammaConfig& cfg, const Chain& c) {
    if (c.length() == 0) return true;
    return minimal_chain(cfg, c.start(), c.end()).links() == c.links();
}

} // namespace koszul
