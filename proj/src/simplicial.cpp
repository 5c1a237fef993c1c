#include "koszul/simplicial.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "koszul/errors.hpp"

namespace koszul {

std::vector<Face> SimplicialComplex::empty_list_;

namespace {

std::size_t max_faces_cap() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("KOSZUL_LAB_MAX_FACES")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(2'000'000);
    }();
    return cap;
}

struct Stats {
    std::atomic<std::uint64_t> complexes{0};
    std::atomic<std::uint64_t> boundary_square_checks{0};
    std::atomic<std::uint64_t> euler_checks{0};
    std::atomic<std::uint64_t> field_cross_checks{0};
    std::atomic<std::uint64_t> field_disagreements{0};
};

Stats& stats() {
    static Stats s;
    return s;
}

} // namespace

SelfCheckStats self_check_stats() {
    auto& s = stats();
    return {s.complexes.load(), s.boundary_square_checks.load(), s.euler_checks.load(),
            s.field_cross_checks.load(), s.field_disagreements.load()};
}

void reset_self_check_stats() {
    auto& s = stats();
    s.complexes = 0;
    s.boundary_square_checks = 0;
    s.euler_checks = 0;
    s.field_cross_checks = 0;
    s.field_disagreements = 0;
}

SimplicialComplex SimplicialComplex::void_complex() {
    return from_facets(0, {});
}

SimplicialComplex SimplicialComplex::empty_complex() {
    return from_facets(0, {Face{}});
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<Face> facets) {
    if (vertex_count < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
    SimplicialComplex K;
    K.vertex_count_ = vertex_count;
    for (Face& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("SimplicialComplex: repeated vertex in facet");
        if (!f.empty() && (f.front() < 0 || f.back() >= vertex_count))
            throw std::invalid_argument("SimplicialComplex: facet vertex out of range");
    }
    // Keep only inclusion-maximal facets.
    std::sort(facets.begin(), facets.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    for (const Face& f : facets) {
        bool nested = std::any_of(K.facets_.begin(), K.facets_.end(), [&](const Face& g) {
            return std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!nested) K.facets_.push_back(f);
    }
    std::sort(K.facets_.begin(), K.facets_.end());
    if (K.facets_.empty()) return K; // VOID

    int dim = -1;
    for (const Face& f : K.facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    std::vector<std::set<Face>> by_dim(static_cast<std::size_t>(dim + 2));
    std::size_t total = 0;
    for (const Face& f : K.facets_) {
        // All subsets of f, by bitmask.
        const auto k = f.size();
        if (k > 62) throw LimitExceededError("SimplicialComplex: facet too large to enumerate");
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            Face sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1ull << b)) sub.push_back(f[b]);
            auto& bucket = by_dim[sub.size()];
            if (bucket.insert(std::move(sub)).second && ++total > max_faces_cap())
                throw LimitExceededError("SimplicialComplex: face count exceeds KOSZUL_LAB_MAX_FACES");
        }
    }
    for (auto& bucket : by_dim)
        K.faces_.emplace_back(bucket.begin(), bucket.end());
    return K;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Point> labels,
                                                 std::vector<Face> facets) {
    SimplicialComplex K = from_facets(static_cast<int>(labels.size()), std::move(facets));
    K.labels_ = std::move(labels);
    return K;
}

int SimplicialComplex::dim() const {
    return static_cast<int>(faces_.size()) - 2;
}

bool SimplicialComplex::pure() const {
    for (const Face& f : facets_)
        if (static_cast<int>(f.size()) - 1 != dim()) return false;
    return true;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int i) const {
    int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(faces_.size())) return empty_list_;
    return faces_[static_cast<std::size_t>(idx)];
}

std::size_t SimplicialComplex::total_face_count() const {
    std::size_t t = 0;
    for (const auto& bucket : faces_) t += bucket.size();
    return t;
}

FieldDescriptor FieldDescriptor::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("field: prime out of range");
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    return {false, p};
}

std::string FieldDescriptor::to_string() const {
    return rational ? "q" : "p:" + std::to_string(p);
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int i) {
    SparseIntMatrix M;
    const auto& rows_faces = K.faces_of_dim(i - 1);
    const auto& cols_faces = K.faces_of_dim(i);
    M.rows = rows_faces.size();
    M.cols = cols_faces.size();
    M.columns.resize(M.cols);
    if (M.rows == 0 || M.cols == 0) return M;
    std::map<Face, std::size_t> row_index;
    for (std::size_t r = 0; r < rows_faces.size(); ++r) row_index[rows_faces[r]] = r;
    for (std::size_t c = 0; c < cols_faces.size(); ++c) {
        const Face& f = cols_faces[c];
        int sign = 1;
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
            M.columns[c].push_back({row_index.at(sub), sign});
            sign = -sign;
        }
        std::sort(M.columns[c].begin(), M.columns[c].end());
    }
    return M;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

// One sparse row: sorted (column, value) pairs, values nonzero.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

template <typename Scalar>
std::vector<SparseRow<Scalar>> rows_of(const SparseIntMatrix& M, Scalar (*conv)(std::int64_t)) {
    std::vector<SparseRow<Scalar>> rows(M.rows);
    for (std::size_t c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) {
            Scalar s = conv(v);
            if (s != Scalar(0)) rows[r].push_back({c, s});
        }
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return rows;
}

// row := a*row - b*pivot, both sorted-sparse; the shared leading column cancels.
template <typename Scalar, typename Mul, typename Sub, typename IsZero>
SparseRow<Scalar> combine(const SparseRow<Scalar>& row, const SparseRow<Scalar>& pivot,
                          const Scalar& a, const Scalar& b, Mul mul, Sub sub, IsZero is_zero) {
    SparseRow<Scalar> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            Scalar v = mul(row[i].second, a);
            if (!is_zero(v)) out.push_back({row[i].first, std::move(v)});
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            Scalar v = sub(Scalar(0), mul(pivot[j].second, b));
            if (!is_zero(v)) out.push_back({pivot[j].first, std::move(v)});
            ++j;
        } else {
            Scalar v = sub(mul(row[i].second, a), mul(pivot[j].second, b));
            if (!is_zero(v)) out.push_back({row[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t rank_rational(const SparseIntMatrix& M) {
    auto rows = rows_of<BigInt>(M, +[](std::int64_t v) { return BigInt(v); });
    // Bucket rows by leading column; eliminate column by column.
    std::map<std::size_t, std::vector<SparseRow<BigInt>>> by_lead;
    for (auto& r : rows)
        if (!r.empty()) by_lead[r.front().first].push_back(std::move(r));
    std::size_t rank = 0;
    while (!by_lead.empty()) {
        auto node = by_lead.extract(by_lead.begin());
        auto& bucket = node.mapped();
        ++rank;
        // Smallest row as pivot keeps fill-in down.
        auto pivot_it = std::min_element(
            bucket.begin(), bucket.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
        SparseRow<BigInt> pivot = std::move(*pivot_it);
        bucket.erase(pivot_it);
        const BigInt& pl = pivot.front().second;
        for (auto& row : bucket) {
            const BigInt& rl = row.front().second;
            BigInt g = boost::multiprecision::gcd(pl, rl);
            BigInt a = pl / g, b = rl / g;
            auto next = combine<BigInt>(
                row, pivot, a, b, [](const BigInt& x, const BigInt& y) { return x * y; },
                [](const BigInt& x, const BigInt& y) { return x - y; },
                [](const BigInt& x) { return x.is_zero(); });
            if (next.empty()) continue;
            // Divide out the content to keep entries small.
            BigInt content = 0;
            for (const auto& [c, v] : next) {
                content = boost::multiprecision::gcd(content, v);
                if (content == 1) break;
            }
            if (content > 1)
                for (auto& [c, v] : next) v /= content;
            by_lead[next.front().first].push_back(std::move(next));
        }
    }
    return rank;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(const SparseIntMatrix& M, std::uint32_t p) {
    const std::uint64_t P = p;
    auto conv = +[](std::int64_t v) { return v; };
    auto raw = rows_of<std::int64_t>(M, conv);
    std::map<std::size_t, std::vector<SparseRow<std::uint64_t>>> by_lead;
    for (auto& r : raw) {
        SparseRow<std::uint64_t> row;
        for (auto& [c, v] : r) {
            std::uint64_t m = static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(P)) +
                                                          static_cast<std::int64_t>(P))) %
                              P;
            if (m) row.push_back({c, m});
        }
        if (!row.empty()) by_lead[row.front().first].push_back(std::move(row));
    }
    std::size_t rank = 0;
    while (!by_lead.empty()) {
        auto node = by_lead.extract(by_lead.begin());
        auto& bucket = node.mapped();
        ++rank;
        auto pivot_it = std::min_element(
            bucket.begin(), bucket.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
        SparseRow<std::uint64_t> pivot = std::move(*pivot_it);
        bucket.erase(pivot_it);
        std::uint64_t inv = pow_mod(pivot.front().second, P - 2, P);
        for (auto& row : bucket) {
            // row := row - row_lead * inv(pivot_lead) * pivot  (mod p)
            std::uint64_t factor = row.front().second * inv % P;
            auto next = combine<std::uint64_t>(
                row, pivot, 1, factor,
                [&](std::uint64_t x, std::uint64_t y) { return x * y % P; },
                [&](std::uint64_t x, std::uint64_t y) { return (x + P - y % P) % P; },
                [](std::uint64_t x) { return x == 0; });
            if (!next.empty()) by_lead[next.front().first].push_back(std::move(next));
        }
    }
    return rank;
}

// Exact integer product check that d_i * d_{i+1} = 0.
bool boundary_square_is_zero(const SparseIntMatrix& lo, const SparseIntMatrix& hi) {
    // lo: C_i -> C_{i-1}, hi: C_{i+1} -> C_i; lo.cols == hi.rows.
    for (const auto& col : hi.columns) {
        std::map<std::size_t, std::int64_t> acc;
        for (const auto& [mid, v] : col)
            for (const auto& [r, w] : lo.columns[mid]) acc[r] += v * w;
        for (const auto& [r, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

} // namespace

std::size_t exact_rank(const SparseIntMatrix& M, FieldDescriptor field) {
    if (M.rows == 0 || M.cols == 0) return 0;
    return field.rational ? rank_rational(M) : rank_mod_p(M, field.p);
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& K, FieldDescriptor field) {
    HomologyProfile profile;
    profile.field = field;
    stats().complexes.fetch_add(1, std::memory_order_relaxed);
    if (K.is_void()) return profile;

    const int dim = K.dim();
    // ranks_d[i+1] = rank of the boundary map out of dimension i.
    std::vector<std::size_t> rank_d(static_cast<std::size_t>(dim) + 3, 0);
    SparseIntMatrix below = boundary_matrix(K, -1);
    for (int i = -1; i <= dim; ++i) {
        SparseIntMatrix here = boundary_matrix(K, i + 1);
        rank_d[static_cast<std::size_t>(i) + 2] = exact_rank(here, field);
        // below maps C_i down; here maps C_{i+1} into C_i.
        if (i >= 0) {
            if (!boundary_square_is_zero(below, here))
                throw SelfCheckError("homology: boundary composed with boundary is nonzero");
            stats().boundary_square_checks.fetch_add(1, std::memory_order_relaxed);
        }
        long long h = static_cast<long long>(K.face_count(i)) -
                      static_cast<long long>(rank_d[static_cast<std::size_t>(i) + 1]) -
                      static_cast<long long>(rank_d[static_cast<std::size_t>(i) + 2]);
        if (h < 0) throw SelfCheckError("homology: negative rank");
        profile.ranks[i] = static_cast<std::size_t>(h);
        below = std::move(here);
    }

    long long euler_faces = 0, euler_ranks = 0;
    for (int i = -1; i <= dim; ++i) {
        long long sign = (i % 2 == 0) ? 1 : -1;
        euler_faces += sign * static_cast<long long>(K.face_count(i));
        euler_ranks += sign * static_cast<long long>(profile.rank(i));
    }
    if (euler_faces != euler_ranks)
        throw SelfCheckError("homology: Euler characteristic mismatch");
    stats().euler_checks.fetch_add(1, std::memory_order_relaxed);
    return profile;
}

CrossCheckedHomology reduced_homology_cross_checked(const SimplicialComplex& K) {
    CrossCheckedHomology out;
    out.rational = reduced_homology_ranks(K, FieldDescriptor::rationals());
    for (std::uint32_t p : {2u, 32003u}) {
        auto modp = reduced_homology_ranks(K, FieldDescriptor::prime(p));
        stats().field_cross_checks.fetch_add(1, std::memory_order_relaxed);
        if (modp.ranks != out.rational.ranks) {
            out.fields_agree = false;
            stats().field_disagreements.fetch_add(1, std::memory_order_relaxed);
        }
    }
    return out;
}

} // namespace koszul
