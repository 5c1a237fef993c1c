#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "koszul/point.hpp"

namespace koszul {

// A face is a sorted set of vertex indices. The empty face is {}.
using Face = std::vector<int>;

// Abstract simplicial complex, immutable after construction. Distinguishes
// the VOID complex (no faces at all, every homology rank 0) from the EMPTY
// complex (exactly the empty face, reduced H_{-1} of rank 1): the difference
// carries real meaning downstream, where the complex of an interval with no
// interior points is EMPTY, not VOID.
class SimplicialComplex {
  public:
    // No faces at all.
    static SimplicialComplex void_complex();
    // Only the empty face.
    static SimplicialComplex empty_complex();
    // Non-nested facets are kept (nested ones are absorbed); passing no
    // facets yields the VOID complex; a single empty facet yields EMPTY.
    // All faces are enumerated eagerly; if their total exceeds the
    // KOSZUL_LAB_MAX_FACES environment cap, throws LimitExceededError.
    static SimplicialComplex from_facets(int vertex_count, std::vector<Face> facets);
    // Same, with point labels attached to the vertices (for reports).
    static SimplicialComplex from_facets(std::vector<Point> labels, std::vector<Face> facets);

    int vertex_count() const { return vertex_count_; }
    bool is_void() const { return faces_.empty(); }
    // Only the (-1)-dimensional bucket exists: the sole face is the empty one.
    bool is_empty() const { return faces_.size() == 1; }
    // -2 for VOID, -1 for EMPTY, otherwise max face dimension.
    int dim() const;
    bool pure() const;
    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Point>& labels() const { return labels_; }
    // Sorted list of the i-dimensional faces; i = -1 holds the empty face
    // whenever the complex is not VOID.
    const std::vector<Face>& faces_of_dim(int i) const;
    std::size_t face_count(int i) const { return faces_of_dim(i).size(); }
    std::size_t total_face_count() const;

  private:
    SimplicialComplex() = default;
    int vertex_count_ = 0;
    std::vector<Face> facets_;
    std::vector<Point> labels_;
    // faces_[k] lists the (k-1)-dimensional faces, so faces_[0] is the
    // empty-face singleton; empty vector overall means VOID.
    std::vector<std::vector<Face>> faces_;
    static std::vector<Face> empty_list_;
};

struct FieldDescriptor {
    bool rational = true;
    std::uint32_t p = 0;
    static FieldDescriptor rationals() { return {true, 0}; }
    // Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldDescriptor prime(std::uint32_t p);
    std::string to_string() const;
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

struct HomologyProfile {
    FieldDescriptor field;
    // Reduced homology ranks by dimension, -1 through dim; zeros included.
    std::map<int, std::size_t> ranks;
    std::size_t rank(int i) const {
        auto it = ranks.find(i);
        return it == ranks.end() ? 0 : it->second;
    }
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Sparse integer matrix in column-major form; rows/cols may be zero.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // columns[j] lists (row, entry), sorted by row, entries nonzero.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

// Boundary operator from i-chains to (i-1)-chains with the alternating-sign
// rule on index-sorted vertices; i = 0 is the augmentation sending every
// vertex to the empty face with coefficient +1. Out-of-range i gives the
// appropriately-shaped zero-column or zero-row matrix.
SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int i);

// Exact matrix rank: fraction-free elimination over arbitrary-precision
// integers for the rationals, modular elimination for a prime field.
std::size_t exact_rank(const SparseIntMatrix& M, FieldDescriptor field);

// Reduced homology ranks over the chosen field. Every call verifies
// boundary-squared-is-zero and the Euler characteristic identity
// sum (-1)^i f_i = sum (-1)^i rank H_i (both sides including the i = -1
// term), throwing SelfCheckError on any failure.
HomologyProfile reduced_homology_ranks(const SimplicialComplex& K, FieldDescriptor field);

struct CrossCheckedHomology {
    HomologyProfile rational;
    bool fields_agree = true; // GF(2) and GF(32003) ranks matched the rational ones
};

// Computes the profile over the rationals and over GF(2) and GF(32003),
// recording (not throwing on) any disagreement: char-p ranks can legitimately
// differ when integral homology has torsion.
CrossCheckedHomology reduced_homology_cross_checked(const SimplicialComplex& K);

// Process-wide tallies of the self-checks the homology engine performed.
struct SelfCheckStats {
    std::uint64_t complexes = 0;
    std::uint64_t boundary_square_checks = 0;
    std::uint64_t euler_checks = 0;
    std::uint64_t field_cross_checks = 0;
    std::uint64_t field_disagreements = 0;
};
SelfCheckStats self_check_stats();
void reset_self_check_stats();

} // namespace koszul
