#include "koszul/betti.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// All faces of a hereditary set system, together with its facets, found by
// ascending-index search plus an explicit maximality test.
struct FaceSearch {
    std::size_t vertex_count = 0;
    // can_extend(face, v): face stays feasible after adding vertex v.
    std::function<bool(const Face&, int)> can_extend;

    std::vector<Face> facets() const {
        std::vector<Face> out;
        Face acc;
        search(acc, 0, out);
        return out;
    }

  private:
    void search(Face& acc, int from, std::vector<Face>& out) const {
        bool maximal = true;
        for (int v = 0; v < static_cast<int>(vertex_count); ++v) {
            if (std::binary_search(acc.begin(), acc.end(), v)) continue;
            if (can_extend(acc, v)) {
                maximal = false;
                if (v >= from) {
                    acc.push_back(v);
                    search(acc, v + 1, out);
                    acc.pop_back();
                }
            }
        }
        if (maximal) out.push_back(acc);
    }
};

} // namespace

SimplicialComplex divisor_complex(const GammaConfig& cfg, const Point& lambda) {
    if (!cfg.member(lambda))
        throw NotInSemigroupError("divisor_complex: " + lambda.to_string() +
                                  " is not in the semigroup");
    std::vector<Point> verts;
    for (const Point& g : cfg.generators()) {
        Point rest = lambda - g;
        if (rest.is_nonnegative() && cfg.member(rest)) verts.push_back(g);
    }
    FaceSearch fs;
    fs.vertex_count = verts.size();
    fs.can_extend = [&](const Face& face, int v) {
        Point rest = lambda;
        for (int idx : face) rest = rest - verts[static_cast<std::size_t>(idx)];
        rest = rest - verts[static_cast<std::size_t>(v)];
        return rest.is_nonnegative() && cfg.member(rest);
    };
    return SimplicialComplex::from_facets(verts, fs.facets());
}

SimplicialComplex order_complex(const GammaConfig& cfg, const Point& lambda,
                                bool use_full_veronese) {
    if (!cfg.member(lambda, use_full_veronese))
        throw NotInSemigroupError("order_complex: " + lambda.to_string() +
                                  " is not in the chosen semigroup");
    const int k = static_cast<int>(lambda.sum() / cfg.d());
    std::vector<Point> verts;
    for (int level = 1; level < k; ++level) {
        for (const Point& mu : cfg.level_points(level, use_full_veronese)) {
            Point rest = lambda - mu;
            if (rest.is_nonnegative() && cfg.member(rest, use_full_veronese))
                verts.push_back(mu);
        }
    }
    const auto V = verts.size();
    // comparable[i][j]: verts[i] < verts[j] or verts[j] < verts[i].
    std::vector<std::vector<char>> comparable(V, std::vector<char>(V, 0));
    for (std::size_t i = 0; i < V; ++i) {
        for (std::size_t j = i + 1; j < V; ++j) {
            Point diff = verts[j] - verts[i];
            if (diff.sum() == 0) continue; // same level: incomparable
            if (diff.is_nonnegative() && cfg.member(diff, use_full_veronese))
                comparable[i][j] = comparable[j][i] = 1;
        }
    }
    // Vertices are sorted by (level, lex), so every chain is an ascending
    // index set, and comparability with each current member characterizes
    // insertable vertices (the interval order is transitive along chains).
    FaceSearch fs;
    fs.vertex_count = V;
    fs.can_extend = [&](const Face& face, int v) {
        for (int c : face)
            if (!comparable[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)])
                return false;
        return true;
    };
    return SimplicialComplex::from_facets(verts, fs.facets());
}

std::size_t betti_ideal(const GammaConfig& cfg, const Point& lambda, int i) {
    return reduced_homology_ranks(divisor_complex(cfg, lambda), FieldDescriptor::rationals())
        .rank(i);
}

std::size_t betti_field(const GammaConfig& cfg, const Point& lambda, int i) {
    if (i < 0) throw std::invalid_argument("betti_field: negative homological index");
    return reduced_homology_ranks(order_complex(cfg, lambda, false), FieldDescriptor::rationals())
        .rank(i - 2);
}

BettiReport koszul_scan(const GammaConfig& cfg, int max_degree, const ScanOptions& opts) {
    if (max_degree < 1) throw std::invalid_argument("koszul_scan: max_degree must be at least 1");
    BettiReport report;
    report.max_degree = max_degree;
    std::vector<Point> lambdas;
    for (int level = 1; level <= max_degree; ++level) {
        auto pts = cfg.level_points(level, false);
        lambdas.insert(lambdas.end(), pts.begin(), pts.end());
    }
    report.lambdas_scanned = lambdas.size();

    struct PerLambda {
        std::vector<BettiEntry> entries;
        bool pure = true;
        bool fields_agree = true;
    };
    std::vector<PerLambda> results(lambdas.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= lambdas.size()) break;
            const Point& lambda = lambdas[idx];
            const int degree = static_cast<int>(lambda.sum() / cfg.d());
            SimplicialComplex K = order_complex(cfg, lambda, false);
            PerLambda& out = results[idx];
            out.pure = K.pure() && K.dim() == degree - 2;
            HomologyProfile profile;
            if (opts.cross_check_fields) {
                auto crossed = reduced_homology_cross_checked(K);
                profile = std::move(crossed.rational);
                out.fields_agree = crossed.fields_agree;
            } else {
                profile = reduced_homology_ranks(K, FieldDescriptor::rationals());
            }
            for (const auto& [dim, rank] : profile.ranks) {
                if (rank == 0) continue;
                out.entries.push_back({dim + 2, lambda, rank, degree});
            }
            std::size_t finished = done.fetch_add(1) + 1;
            if (opts.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                opts.progress(finished, lambdas.size());
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(lambdas.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t idx = 0; idx < lambdas.size(); ++idx) {
        const PerLambda& r = results[idx];
        report.entries.insert(report.entries.end(), r.entries.begin(), r.entries.end());
        if (!r.pure) report.purity_failures.push_back(lambdas[idx]);
        if (!r.fields_agree) report.field_disagreements.push_back(lambdas[idx]);
    }
    for (const BettiEntry& e : report.entries) {
        report.regularity = std::max(report.regularity, e.degree - e.i);
        if (e.degree > e.i) report.violations.push_back(e);
    }
    return report;
}

} // namespace koszul
