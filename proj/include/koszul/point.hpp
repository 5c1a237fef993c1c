#ifndef KOSZUL_POINT_HPP
#define KOSZUL_POINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

using Coord = std::int64_t;

// Lattice point in N^n. Comparison is lexicographic left to right: the first
// differing coordinate decides and a larger coordinate means a larger point,
// so (0,...,0,d) is the smallest element of its slice.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Coord> coords) : c_(std::move(coords)) {}
    static Point zero(int n) { return Point(std::vector<Coord>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(c_.size()); }
    Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Coord>& coords() const { return c_; }

    Coord sum() const;
    bool is_nonnegative() const;
    bool is_zero() const;

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;

    bool operator==(const Point&) const = default;
    std::strong_ordering operator<=>(const Point& o) const { return c_ <=> o.c_; }

    std::string to_string() const; // "(3,9)"

private:
    std::vector<Coord> c_;
};

struct PointHash {
    std::size_t operator()(const Point& p) const;
};

// True when a <= b componentwise (a "divides" b in the affine semigroup sense).
// Throws std::invalid_argument on dimension mismatch.
bool dominated(const Point& a, const Point& b);

// All points of N^n with coordinate sum d, in strictly increasing lex order.
// n must be positive and d nonnegative.
std::vector<Point> enumerate_points(int n, int d);

// Number of points in the slice above, as a checked int64.
Coord slice_size(int n, int d);

} // namespace koszul

#endif
