#ifndef KOSZUL_FILTRATION_HPP
#define KOSZUL_FILTRATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "koszul/chains.hpp"
#include "koszul/gamma.hpp"
#include "koszul/point.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

// Maximal chains of the full order complex of lambda that use the puncture as
// a link at least once, ascending by chain_compare. Empty when no puncture is
// configured. Throws NotInSemigroupError when lambda is not a full Veronese
// member, LimitExceededError when the level exceeds max_links.
std::vector<Chain> offending_chains(const GammaConfig& cfg, const Point& lambda,
                                    int max_links = 7);

// The subcomplex of the simplex on p's interior nodes formed by the faces
// shared with some maximal chain strictly below p. Computed from the raw
// definition: one shared-node mask per lower chain, maximal masks kept as
// facets. Vertices are labeled with p's interior nodes in chain order. VOID
// when nothing lies below p. Throws std::invalid_argument unless p runs from
// 0 to lambda with at least one puncture link.
SimplicialComplex lower_intersection(const GammaConfig& cfg, const Point& lambda, const Chain& p,
                                     int max_links = 7);

// Structural checks for one offending chain p. Node indexes are 0-based
// positions along p; a facet omits the complement block L.
struct FacetCheckEntry {
    explicit FacetCheckEntry(Chain chain) : p(std::move(chain)) {}
    Chain p;
    std::vector<Face> facet_list; // facets of the lower intersection
    bool dim_ok = true;           // dimension equals level(lambda) - 3
    bool consecutive_ok = true;   // every omitted block is consecutive
    bool size_ok = true;          // every omitted block has size <= 2
    bool spacing_ok = true;       // block {i,i+1} forbids {i+1,i+2} and {i+2,i+3}
    // Link segments of p across omitted blocks of size >= 2: puncture-free,
    // not minimal as a whole, every proper contiguous subchain minimal, links
    // nondecreasing.
    bool segment_ok = true;
    bool vanishing_ok = true; // reduced homology zero in dimensions <= nodes - 5
    HomologyProfile homology; // rational profile of the lower intersection
    bool fields_agree = true;
    bool all_ok() const {
        return dim_ok && consecutive_ok && size_ok && spacing_ok && segment_ok && vanishing_ok;
    }
};

struct FacetViolation {
    std::string kind; // dim | consecutive | size | spacing | segment | vanishing
    Point lambda;
    Chain p;
    std::vector<Face> facets;    // the facet(s) at fault
    std::vector<Chain> witnesses; // chains below p realizing those facets
};

struct FacetLemmaReport {
    Point lambda;
    std::vector<FacetCheckEntry> entries; // one per offending chain, ascending
    std::vector<FacetViolation> violations;
    // The structural analysis assumes a puncture with at least two positive
    // coordinates; outside that the checks still run but are flagged.
    bool outside_support_hypothesis = false;
};

// Runs every structural check on every offending chain of lambda. Violations
// are report entries, never exceptions. jobs > 1 distributes chains across
// threads; the report order stays ascending by chain.
FacetLemmaReport verify_facet_lemmas(const GammaConfig& cfg, const Point& lambda, int jobs = 1,
                                     int max_links = 7);

struct FacetScanReport {
    int min_level = 0;
    int max_level = 0;
    std::size_t lambdas_scanned = 0;
    std::size_t chains_checked = 0;
    std::size_t facets_checked = 0;
    std::size_t field_disagreements = 0;
    std::vector<FacetViolation> violations;
    bool outside_support_hypothesis = false;
};

// verify_facet_lemmas over every semigroup member with level in
// [min_level, max_level], aggregating counts and violations.
FacetScanReport facet_lemma_scan(const GammaConfig& cfg, int min_level, int max_level,
                                 int jobs = 1, int max_links = 7,
                                 std::function<void(std::size_t, std::size_t)> progress = {});

// Complex on nodes {0,...,n-1} whose facets omit one node or one adjacent
// pair; the shapes the facet lemmas allow for a lower intersection.
struct FacetPattern {
    int n = 0;
    std::vector<int> singles; // facet omitting node i
    std::vector<int> pairs;   // facet omitting nodes {i, i+1}
    SimplicialComplex realize() const;
    std::string to_string() const;
};

struct AbstractLemmaViolation {
    FacetPattern pattern;
    HomologyProfile homology; // rational
    bool fields_agree = true;
};

struct AbstractLemmaReport {
    int n = 0;
    bool weak_form = false;
    std::size_t patterns_checked = 0;
    std::vector<AbstractLemmaViolation> violations;
};

// Enumerates every admissible facet pattern on n nodes and verifies the
// homology vanishing claim on the realized complex. The weak form takes
// pair-only patterns under the spacing rule and requires all reduced homology
// to vanish; the strong form takes mixed patterns containing at least one
// single-omission facet (so the complex has dimension n-2) and requires
// vanishing in dimensions <= n-5. Requires 3 <= n <= 8.
AbstractLemmaReport verify_abstract_homology_lemma(int n, bool weak_form);

struct MayerVietorisStage {
    int index = 0;                // 1-based; the last stage is the full complex
    std::optional<Chain> chain;   // the offending chain this stage sits below
    HomologyProfile homology;     // rational
    std::vector<int> low_nonzero; // dimensions below the top carrying homology
};

struct MayerVietorisReport {
    Point lambda;
    std::size_t offending_count = 0;
    std::vector<MayerVietorisStage> stages; // index ascending, offending_count + 1 of them
    bool below_top_ok = true;
    bool outside_support_hypothesis = false;
    std::size_t field_disagreements = 0;
};

// Direct homology of every filtration stage: stage i is the subcomplex of the
// full order complex generated by the maximal chains below the i-th offending
// chain, so stage 1 is the punctured order complex and the final stage is the
// full one. Each profile is cross-checked over three fields.
MayerVietorisReport mayer_vietoris_scan(const GammaConfig& cfg, const Point& lambda,
                                        int max_links = 7);

} // namespace koszul

#endif
