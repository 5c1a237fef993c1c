#ifndef KOSZUL_GAMMA_HPP
#define KOSZUL_GAMMA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszul/point.hpp"

namespace koszul {

enum class Classification {
    VeronesePoint,      // puncture sorts to (0,...,0,d)
    NotTwoFull,         // puncture sorts to (0,...,0,1,d-1), d != 3
    TwoFullGood,        // generic puncture (or no puncture)
    NonKoszulException, // puncture is a permutation of (0,...,0,2,d-2), d >= 3
};

const char* to_string(Classification c);

// Memoized semigroup membership. Synchronized so scan workers can share one
// table; entries are immutable once inserted, so racing recomputation is
// benign. One table per configuration and generator set, never shared across
// configurations.
class MembershipTable {
public:
    std::optional<bool> lookup(const Point& p) const;
    void insert(const Point& p, bool value);

private:
    mutable std::mutex mu_;
    std::unordered_map<Point, bool, PointHash> memo_;
};

// The semigroup generated by one degree-d slice of N^n, with one point
// optionally removed. Immutable after construction; safe to share across
// threads.
class GammaConfig {
public:
    // Throws std::invalid_argument unless n >= 2, d >= 2 and, when present,
    // puncture lies in the slice. Unsorted punctures are accepted and flagged.
    static GammaConfig make(int n, int d, std::optional<Point> puncture);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::optional<Point>& puncture() const { return puncture_; }
    Classification classification() const { return cls_; }
    bool puncture_unsorted() const { return puncture_unsorted_; }

    // Generators, strictly increasing in lex order. Size is the slice size
    // minus one when a puncture is present.
    const std::vector<Point>& generators() const { return generators_; }
    // The full slice including the puncture, also lex sorted.
    const std::vector<Point>& slice() const { return slice_; }

    bool is_generator(const Point& p) const;
    bool in_slice(const Point& p) const;

    // Membership of lambda in the punctured semigroup (or the full Veronese
    // semigroup when use_full_veronese). False when the coordinate sum is not
    // a multiple of d. Lambda must be nonnegative of dimension n.
    bool member(const Point& lambda, bool use_full_veronese = false) const;
    bool semigroup_member(const Point& lambda) const { return member(lambda, false); }

    // lambda's level (coordinate sum / d); throws NotInSemigroupError if the
    // sum is not a multiple of d.
    int level_of(const Point& lambda) const;

    // All semigroup members at the given level, lex sorted. Generated as
    // sums of the previous level with the generator set, deduplicated.
    std::vector<Point> level_points(int level, bool use_full_veronese = false) const;

private:
    GammaConfig() = default;

    int n_ = 0, d_ = 0;
    std::optional<Point> puncture_;
    bool puncture_unsorted_ = false;
    Classification cls_ = Classification::TwoFullGood;
    std::vector<Point> generators_;
    std::vector<Point> slice_;
    // Membership tables are per-config caches; shared_ptr keeps GammaConfig
    // copyable without duplicating memoized work.
    std::shared_ptr<MembershipTable> table_;
    std::shared_ptr<MembershipTable> table_full_;

    bool member_rec(const Point& lambda, int level, bool use_full) const;
};

struct TwoFullResult {
    bool two_full = false;
    std::vector<Point> missing; // points of the 2d-slice not in Gamma+Gamma, lex sorted
};

// Brute force check whether Gamma + Gamma covers the whole 2d-slice.
TwoFullResult is_two_full(const GammaConfig& cfg);

} // namespace koszul

#endif
