#ifndef KOSZUL_CHAINS_HPP
#define KOSZUL_CHAINS_HPP

#include <compare>
#include <optional>
#include <vector>

#include "koszul/gamma.hpp"
#include "koszul/point.hpp"

namespace koszul {

// Closed chain: a start point plus a sequence of links, each a point of the
// degree-d slice. The a-degree counts links equal to the puncture.
class Chain {
public:
    // Validates every link lies in the slice; throws std::invalid_argument.
    Chain(const GammaConfig& cfg, Point start, std::vector<Point> links);

    const Point& start() const { return start_; }
    const Point& end() const { return end_; }
    const std::vector<Point>& links() const { return links_; }
    int length() const { return static_cast<int>(links_.size()); }
    int a_degree() const { return a_degree_; }

    // Partial sums strictly between start and end (length-1 of them).
    std::vector<Point> interior_nodes() const;

    bool operator==(const Chain& o) const { return start_ == o.start_ && links_ == o.links_; }
    std::string to_string() const;

private:
    Point start_;
    Point end_;
    std::vector<Point> links_;
    int a_degree_ = 0;
};

// Chains with more puncture links are larger; ties break by left-to-right
// lex comparison of the link sequences. Only defined for chains sharing both
// endpoints (throws std::invalid_argument otherwise).
std::strong_ordering chain_compare(const Chain& x, const Chain& y);

// Lex-least element of the slice (use_full_veronese) or the generator set
// restricted below m, by closed form: locate the pivot index i with
// sum(m[i+1:]) < d <= sum(m[i:]), take s = (0,...,0,s_i,m[i+1],...,m[n]); when
// s collides with the puncture, step to the lex successor inside the
// restriction (bump position i if possible, otherwise borrow at the last
// positive position before i). Returns nullopt when the restriction is empty.
// m must be nonnegative of dimension n.
std::optional<Point> min_below(const GammaConfig& cfg, const Point& m, bool use_full_veronese);

// Same value by brute-force filtering; used as a cross-check oracle.
std::optional<Point> min_below_bruteforce(const GammaConfig& cfg, const Point& m,
                                          bool use_full_veronese);

// All chains from start to end, optionally restricted to generator links,
// sorted ascending by chain_compare. Throws LimitExceededError when the
// required number of links exceeds max_links.
std::vector<Chain> enumerate_chains(const GammaConfig& cfg, const Point& start, const Point& end,
                                    bool links_in_gamma_only, int max_links = 7);

// Least chain from start to end: fewest puncture links first, then lex-least
// link sequence. The two implementations must agree; the greedy one works
// link by link with feasibility checks, the baseline enumerates everything.
// Throws NotInSemigroupError when no chain exists.
Chain minimal_chain(const GammaConfig& cfg, const Point& start, const Point& end);
Chain minimal_chain_baseline(const GammaConfig& cfg, const Point& start, const Point& end,
                             int max_links = 7);

bool is_minimal(const GammaConfig& cfg, const Chain& c);

} // namespace koszul

#endif
