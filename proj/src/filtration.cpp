#include "koszul/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// Every maximal chain of the full order complex of lambda, ascending, with
// interior nodes precomputed and the offending ones indexed.
struct ChainSet {
    std::vector<Chain> all;
    std::vector<std::vector<Point>> nodes;
    std::vector<std::size_t> offending;
};

ChainSet enumerate_maximal_chains(const GammaConfig& cfg, const Point& lambda, int max_links) {
    if (!cfg.member(lambda, true))
        throw NotInSemigroupError("lambda " + lambda.to_string() +
                                  " is not in the full Veronese semigroup");
    ChainSet s;
    s.all = enumerate_chains(cfg, Point::zero(cfg.n()), lambda, false, max_links);
    s.nodes.reserve(s.all.size());
    for (std::size_t i = 0; i < s.all.size(); ++i) {
        s.nodes.push_back(s.all[i].interior_nodes());
        if (s.all[i].a_degree() >= 1) s.offending.push_back(i);
    }
    return s;
}

// Interior nodes of two maximal chains can only coincide level by level, so
// the shared-node mask is a positionwise comparison.
Face shared_mask(const std::vector<Point>& p_nodes, const std::vector<Point>& q_nodes) {
    Face f;
    for (std::size_t t = 0; t < p_nodes.size(); ++t)
        if (p_nodes[t] == q_nodes[t]) f.push_back(static_cast<int>(t));
    return f;
}

// Facet masks of the lower intersection of chain p_idx, each with the first
// chain below p realizing it.
std::map<Face, std::size_t> lower_masks(const ChainSet& s, std::size_t p_idx) {
    std::map<Face, std::size_t> first;
    const auto& p_nodes = s.nodes[p_idx];
    for (std::size_t q = 0; q < p_idx; ++q) {
        Face f = shared_mask(p_nodes, s.nodes[q]);
        if (f.size() == p_nodes.size())
            throw SelfCheckError("distinct maximal chains share every interior node");
        first.emplace(std::move(f), q);
    }
    return first;
}

SimplicialComplex build_lower(const ChainSet& s, std::size_t p_idx,
                              const std::map<Face, std::size_t>& masks) {
    std::vector<Face> facets;
    facets.reserve(masks.size());
    for (const auto& [f, q] : masks) facets.push_back(f);
    return SimplicialComplex::from_facets(s.nodes[p_idx], std::move(facets));
}

bool puncture_support_small(const GammaConfig& cfg) {
    if (!cfg.puncture()) return false;
    int positive = 0;
    for (Coord c : cfg.puncture()->coords())
        if (c > 0) ++positive;
    return positive < 2;
}

// Reduced homology must vanish in every dimension <= max_dim over all three
// fields; the modular profiles are recomputed only when they disagree with
// the rational one somewhere.
bool low_dims_zero(const SimplicialComplex& K, const CrossCheckedHomology& cross, int max_dim) {
    for (int j = -1; j <= max_dim; ++j)
        if (cross.rational.rank(j) != 0) return false;
    if (!cross.fields_agree) {
        for (std::uint32_t p : {2u, 32003u}) {
            auto prof = reduced_homology_ranks(K, FieldDescriptor::prime(p));
            for (int j = -1; j <= max_dim; ++j)
                if (prof.rank(j) != 0) return false;
        }
    }
    return true;
}

struct EntryResult {
    FacetCheckEntry entry;
    std::vector<FacetViolation> violations;
};

EntryResult check_offending_chain(const GammaConfig& cfg, const Point& lambda, int level,
                                  const ChainSet& s, std::size_t p_idx) {
    const Chain& p = s.all[p_idx];
    const auto& p_nodes = s.nodes[p_idx];
    const int node_count = static_cast<int>(p_nodes.size());

    auto masks = lower_masks(s, p_idx);
    SimplicialComplex K = build_lower(s, p_idx, masks);

    EntryResult out{FacetCheckEntry(p), {}};
    FacetCheckEntry& e = out.entry;
    e.facet_list = K.facets();

    auto violate = [&](const char* kind, std::vector<Face> facets, std::vector<Chain> witnesses) {
        out.violations.push_back(
            FacetViolation{kind, lambda, p, std::move(facets), std::move(witnesses)});
    };
    auto witness_of = [&](const Face& facet) { return s.all[masks.at(facet)]; };

    e.dim_ok = K.dim() == level - 3;
    if (!e.dim_ok) violate("dim", e.facet_list, {});

    std::set<int> pair_starts;
    std::map<int, Face> pair_facet;
    for (const Face& f : e.facet_list) {
        std::vector<int> block;
        for (int t = 0; t < node_count; ++t)
            if (!std::binary_search(f.begin(), f.end(), t)) block.push_back(t);
        if (block.empty()) throw SelfCheckError("lower intersection contains the full simplex");

        bool consecutive = block.back() - block.front() + 1 == static_cast<int>(block.size());
        if (!consecutive) {
            e.consecutive_ok = false;
            violate("consecutive", {f}, {witness_of(f)});
        }
        if (block.size() > 2) {
            e.size_ok = false;
            violate("size", {f}, {witness_of(f)});
        }
        if (block.size() == 2 && consecutive) {
            pair_starts.insert(block.front());
            pair_facet[block.front()] = f;
        }

        // The links of p spanning an omitted block of size >= 2 form a
        // segment that must avoid the puncture, fail to be minimal as a
        // whole, have every proper contiguous subchain minimal, and be
        // nondecreasing.
        if (consecutive && block.size() >= 2) {
            int lo = block.front(), hi = block.back();
            Point seg_start = lo == 0 ? Point::zero(cfg.n()) : p_nodes[static_cast<std::size_t>(lo - 1)];
            std::vector<Point> seg_links(p.links().begin() + lo, p.links().begin() + hi + 2);
            Chain segment(cfg, seg_start, seg_links);
            bool ok = segment.a_degree() == 0 && !is_minimal(cfg, segment);
            for (std::size_t i = 0; ok && i < seg_links.size(); ++i) {
                if (i + 1 < seg_links.size() && seg_links[i + 1] < seg_links[i]) ok = false;
                Point sub_start = seg_start;
                for (std::size_t t = 0; t < i; ++t) sub_start = sub_start + seg_links[t];
                for (std::size_t j = i + 1; ok && j < seg_links.size(); ++j) {
                    if (i == 0 && j + 1 == seg_links.size()) continue; // the whole segment
                    std::vector<Point> sub(seg_links.begin() + static_cast<long>(i),
                                           seg_links.begin() + static_cast<long>(j + 1));
                    if (!is_minimal(cfg, Chain(cfg, sub_start, sub))) ok = false;
                }
            }
            if (!ok) {
                e.segment_ok = false;
                violate("segment", {f}, {witness_of(f)});
            }
        }
    }

    for (int i : pair_starts) {
        for (int step : {1, 2}) {
            if (pair_starts.count(i + step)) {
                e.spacing_ok = false;
                violate("spacing", {pair_facet[i], pair_facet[i + step]},
                        {witness_of(pair_facet[i]), witness_of(pair_facet[i + step])});
            }
        }
    }

    auto cross = reduced_homology_cross_checked(K);
    e.homology = cross.rational;
    e.fields_agree = cross.fields_agree;
    e.vanishing_ok = low_dims_zero(K, cross, node_count - 5);
    if (!e.vanishing_ok) violate("vanishing", e.facet_list, {});

    return out;
}

} // namespace

std::vector<Chain> offending_chains(const GammaConfig& cfg, const Point& lambda, int max_links) {
    ChainSet s = enumerate_maximal_chains(cfg, lambda, max_links);
    std::vector<Chain> out;
    out.reserve(s.offending.size());
    for (std::size_t i : s.offending) out.push_back(s.all[i]);
    return out;
}

SimplicialComplex lower_intersection(const GammaConfig& cfg, const Point& lambda, const Chain& p,
                                     int max_links) {
    if (!p.start().is_zero() || p.end() != lambda)
        throw std::invalid_argument("chain does not run from 0 to lambda");
    if (p.a_degree() < 1) throw std::invalid_argument("chain is not offending");
    ChainSet s = enumerate_maximal_chains(cfg, lambda, max_links);
    auto it = std::lower_bound(s.all.begin(), s.all.end(), p, [](const Chain& x, const Chain& y) {
        return chain_compare(x, y) == std::strong_ordering::less;
    });
    if (it == s.all.end() || !(*it == p))
        throw SelfCheckError("offending chain missing from the full enumeration");
    auto p_idx = static_cast<std::size_t>(it - s.all.begin());
    return build_lower(s, p_idx, lower_masks(s, p_idx));
}

FacetLemmaReport verify_facet_lemmas(const GammaConfig& cfg, const Point& lambda, int jobs,
                                     int max_links) {
    ChainSet s = enumerate_maximal_chains(cfg, lambda, max_links);
    const int level = cfg.level_of(lambda);

    FacetLemmaReport report;
    report.lambda = lambda;
    report.outside_support_hypothesis = puncture_support_small(cfg);

    std::vector<std::optional<EntryResult>> slots(s.offending.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(s.offending.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= s.offending.size()) return;
            try {
                slots[i] = check_offending_chain(cfg, lambda, level, s, s.offending[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(run);
        run();
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& slot : slots) {
        report.entries.push_back(std::move(slot->entry));
        for (auto& v : slot->violations) report.violations.push_back(std::move(v));
    }
    return report;
}

FacetScanReport facet_lemma_scan(const GammaConfig& cfg, int min_level, int max_level, int jobs,
                                 int max_links,
                                 std::function<void(std::size_t, std::size_t)> progress) {
    if (min_level < 1 || max_level < min_level)
        throw std::invalid_argument("level range must satisfy 1 <= min <= max");
    FacetScanReport report;
    report.min_level = min_level;
    report.max_level = max_level;
    report.outside_support_hypothesis = puncture_support_small(cfg);

    std::vector<Point> lambdas;
    for (int level = min_level; level <= max_level; ++level)
        for (const Point& lambda : cfg.level_points(level, false)) lambdas.push_back(lambda);

    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        auto r = verify_facet_lemmas(cfg, lambdas[i], jobs, max_links);
        ++report.lambdas_scanned;
        report.chains_checked += r.entries.size();
        for (const auto& e : r.entries) {
            report.facets_checked += e.facet_list.size();
            if (!e.fields_agree) ++report.field_disagreements;
        }
        for (auto& v : r.violations) report.violations.push_back(std::move(v));
        if (progress) progress(i + 1, lambdas.size());
    }
    return report;
}

SimplicialComplex FacetPattern::realize() const {
    if (n < 1) throw std::invalid_argument("pattern needs at least one node");
    std::vector<Face> facets;
    for (int i : singles) {
        if (i < 0 || i >= n) throw std::invalid_argument("single omission out of range");
        Face f;
        for (int v = 0; v < n; ++v)
            if (v != i) f.push_back(v);
        facets.push_back(std::move(f));
    }
    for (int i : pairs) {
        if (i < 0 || i + 1 >= n) throw std::invalid_argument("pair omission out of range");
        Face f;
        for (int v = 0; v < n; ++v)
            if (v != i && v != i + 1) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::string FacetPattern::to_string() const {
    std::string out = "pattern(n=" + std::to_string(n);
    for (int i : singles) out += ", -{" + std::to_string(i) + "}";
    for (int i : pairs) out += ", -{" + std::to_string(i) + "," + std::to_string(i + 1) + "}";
    return out + ")";
}

AbstractLemmaReport verify_abstract_homology_lemma(int n, bool weak_form) {
    if (n < 3 || n > 8) throw std::invalid_argument("node count must be between 3 and 8");
    AbstractLemmaReport report;
    report.n = n;
    report.weak_form = weak_form;

    auto spacing_ok = [](unsigned mask) {
        for (int i = 0; mask >> i != 0; ++i)
            if ((mask >> i) & 1u)
                if (((mask >> (i + 1)) & 1u) || ((mask >> (i + 2)) & 1u)) return false;
        return true;
    };
    auto bits_of = [](unsigned mask) {
        std::vector<int> out;
        for (int i = 0; mask >> i != 0; ++i)
            if ((mask >> i) & 1u) out.push_back(i);
        return out;
    };
    auto check = [&](FacetPattern pattern, int vanish_up_to) {
        ++report.patterns_checked;
        auto K = pattern.realize();
        auto cross = reduced_homology_cross_checked(K);
        if (!low_dims_zero(K, cross, vanish_up_to))
            report.violations.push_back(
                AbstractLemmaViolation{std::move(pattern), cross.rational, cross.fields_agree});
    };

    const unsigned pair_limit = 1u << (n - 1);
    if (weak_form) {
        // Pair-only patterns under the spacing rule: all homology must vanish.
        for (unsigned pmask = 1; pmask < pair_limit; ++pmask) {
            if (!spacing_ok(pmask)) continue;
            check(FacetPattern{n, {}, bits_of(pmask)}, n);
        }
    } else {
        // Mixed patterns with at least one single omission (dimension n-2).
        // A pair omission {j, j+1} nested inside a single omission {j} or
        // {j+1} would not be a facet, so such combinations are skipped.
        for (unsigned ones = 1; ones < (1u << n); ++ones) {
            for (unsigned pmask = 0; pmask < pair_limit; ++pmask) {
                if (!spacing_ok(pmask)) continue;
                if ((pmask & ones) != 0 || (pmask & (ones >> 1)) != 0) continue;
                check(FacetPattern{n, bits_of(ones), bits_of(pmask)}, n - 5);
            }
        }
    }
    return report;
}

MayerVietorisReport mayer_vietoris_scan(const GammaConfig& cfg, const Point& lambda,
                                        int max_links) {
    ChainSet s = enumerate_maximal_chains(cfg, lambda, max_links);
    const int level = cfg.level_of(lambda);

    MayerVietorisReport report;
    report.lambda = lambda;
    report.offending_count = s.offending.size();
    report.outside_support_hypothesis = puncture_support_small(cfg);

    // Shared vertex table for all stages, ordered by level then lex so chain
    // faces come out sorted.
    std::set<Point> node_set;
    for (const auto& nodes : s.nodes)
        for (const Point& v : nodes) node_set.insert(v);
    std::vector<Point> labels(node_set.begin(), node_set.end());
    std::sort(labels.begin(), labels.end(), [](const Point& x, const Point& y) {
        return std::pair(x.sum(), x) < std::pair(y.sum(), y);
    });
    std::map<Point, int> id;
    for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);

    std::vector<Face> chain_faces(s.all.size());
    for (std::size_t i = 0; i < s.all.size(); ++i) {
        Face f;
        for (const Point& v : s.nodes[i]) f.push_back(id.at(v));
        std::sort(f.begin(), f.end());
        chain_faces[i] = std::move(f);
    }

    const std::size_t stage_count = s.offending.size() + 1;
    for (std::size_t stage = 1; stage <= stage_count; ++stage) {
        std::size_t limit =
            stage <= s.offending.size() ? s.offending[stage - 1] : s.all.size();
        std::vector<Face> facets(chain_faces.begin(),
                                 chain_faces.begin() + static_cast<long>(limit));
        auto K = SimplicialComplex::from_facets(labels, std::move(facets));
        auto cross = reduced_homology_cross_checked(K);
        if (!cross.fields_agree) ++report.field_disagreements;

        MayerVietorisStage st;
        st.index = static_cast<int>(stage);
        if (stage <= s.offending.size()) st.chain = s.all[s.offending[stage - 1]];
        st.homology = cross.rational;
        for (const auto& [j, r] : cross.rational.ranks)
            if (r != 0 && j < level - 2) st.low_nonzero.push_back(j);
        if (!st.low_nonzero.empty()) report.below_top_ok = false;
        report.stages.push_back(std::move(st));
    }
    return report;
}

} // namespace koszul
