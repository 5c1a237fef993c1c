#include "koszul/point.hpp"

#include <functional>
#include <stdexcept>

namespace koszul {

Coord Point::sum() const {
    Coord s = 0;
    for (Coord v : c_) s += v;
    return s;
}

bool Point::is_nonnegative() const {
    for (Coord v : c_)
        if (v < 0) return false;
    return true;
}

bool Point::is_zero() const {
    for (Coord v : c_)
        if (v != 0) return false;
    return true;
}

Point Point::operator+(const Point& o) const {
    if (c_.size() != o.c_.size()) throw std::invalid_argument("point dimension mismatch in +");
    std::vector<Coord> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return Point(std::move(r));
}

Point Point::operator-(const Point& o) const {
    if (c_.size() != o.c_.size()) throw std::invalid_argument("point dimension mismatch in -");
    std::vector<Coord> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return Point(std::move(r));
}

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    s += ')';
    return s;
}

std::size_t PointHash::operator()(const Point& p) const {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (Coord v : p.coords()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

bool dominated(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominated: dimension mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Point> enumerate_points(int n, int d) {
    if (n < 1) throw std::invalid_argument("enumerate_points: n must be positive");
    if (d < 0) throw std::invalid_argument("enumerate_points: d must be nonnegative");
    std::vector<Point> out;
    std::vector<Coord> buf(static_cast<std::size_t>(n), 0);
    // First coordinate ascending, rest recursively: yields lex-ascending output
    // starting at (0,...,0,d).
    std::function<void(int, Coord)> rec = [&](int pos, Coord left) {
        if (pos == n - 1) {
            buf[static_cast<std::size_t>(pos)] = left;
            out.emplace_back(buf);
            return;
        }
        for (Coord v = 0; v <= left; ++v) {
            buf[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

Coord slice_size(int n, int d) {
    // binom(n+d-1, n-1) with overflow-checked int64 arithmetic.
    long long k = n - 1;
    long long m = n + static_cast<long long>(d) - 1;
    if (k < 0) throw std::invalid_argument("slice_size: n must be positive");
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (m - k + i) / i;
        if (r > INT64_MAX) throw std::overflow_error("slice_size overflow");
    }
    return static_cast<Coord>(r);
}

} // namespace koszul
