#include "koszul/report.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "koszul/betti.hpp"
#include "koszul/chains.hpp"
#include "koszul/errors.hpp"
#include "koszul/filtration.hpp"
#include "koszul/groebner.hpp"

namespace koszul {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(const Point& p) { return ordered_json(p.coords()); }

ordered_json points_json(const std::vector<Point>& ps) {
    auto arr = ordered_json::array();
    for (const auto& p : ps) arr.push_back(point_json(p));
    return arr;
}

ordered_json faces_json(const std::vector<Face>& fs) {
    auto arr = ordered_json::array();
    for (const auto& f : fs) arr.push_back(ordered_json(f));
    return arr;
}

// Nonzero reduced ranks only, keyed by dimension; zeros carry no information
// and would bloat scan reports.
ordered_json profile_json(const HomologyProfile& h) {
    auto obj = ordered_json::object();
    for (const auto& [dim, rank] : h.ranks)
        if (rank != 0) obj[std::to_string(dim)] = rank;
    return obj;
}

ordered_json monomial_json(const Monomial& m) { return points_json(m.points()); }

struct CommandOutput {
    ordered_json params = ordered_json::object();
    ordered_json results = ordered_json::array();
    ordered_json violations = ordered_json::array();
    ordered_json summary = ordered_json::object();
    std::vector<std::string> text;
    std::vector<std::string> csv;
    bool csv_supported = false;
};

void add_warning(CommandOutput& out, const std::string& w) {
    if (!out.summary.contains("warnings")) out.summary["warnings"] = ordered_json::array();
    out.summary["warnings"].push_back(w);
    out.text.push_back("warning: " + w);
}

void classification_warning(const GammaConfig& cfg, CommandOutput& out) {
    if (cfg.classification() != Classification::TwoFullGood)
        add_warning(out, std::string("configuration classified ") + to_string(cfg.classification()) +
                             "; the structural checks assume a two-full puncture");
}

const Point& require_lambda(const RunParams& p, const char* command) {
    if (!p.lambda) throw std::invalid_argument(std::string(command) + " requires --lambda");
    return *p.lambda;
}

std::string betti_csv_row(int i, const Point& lambda, std::size_t rank, int degree) {
    return std::to_string(i) + ",\"" + lambda.to_string() + "\"," + std::to_string(rank) + "," +
           std::to_string(degree);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void cmd_points(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    if (p.level < 1) throw std::invalid_argument("points requires a positive level");
    auto pts = cfg.level_points(p.level, false);
    out.params["level"] = p.level;
    out.results = points_json(pts);
    out.summary["level"] = p.level;
    out.summary["count"] = pts.size();
    out.text.push_back("level " + std::to_string(p.level) + ": " + std::to_string(pts.size()) +
                       " semigroup points");
    for (const auto& q : pts) out.text.push_back("  " + q.to_string());
}

void cmd_member(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    const Point& lam = require_lambda(p, "member");
    bool member = cfg.member(lam, false);
    bool full = cfg.member(lam, true);
    out.params["lambda"] = point_json(lam);
    ordered_json rec;
    rec["lambda"] = point_json(lam);
    rec["member"] = member;
    rec["member_full_veronese"] = full;
    if (lam.sum() % cfg.d() == 0)
        rec["level"] = lam.sum() / cfg.d();
    else
        rec["level"] = nullptr;
    out.results.push_back(rec);
    out.summary["member"] = member;
    out.text.push_back("lambda " + lam.to_string() + ": member=" + bool_text(member) +
                       " full_veronese=" + bool_text(full));
}

void cmd_two_full(const GammaConfig& cfg, const RunParams&, CommandOutput& out) {
    auto r = is_two_full(cfg);
    ordered_json rec;
    rec["two_full"] = r.two_full;
    rec["missing"] = points_json(r.missing);
    out.results.push_back(rec);

    // The claim under test: two-fullness fails exactly for the punctures
    // sorting to (0,...,0,d) and (0,...,0,1,d-1).
    bool expected = true;
    if (cfg.puncture()) {
        auto sorted = cfg.puncture()->coords();
        std::sort(sorted.begin(), sorted.end());
        std::vector<Coord> vp(static_cast<std::size_t>(cfg.n()), 0);
        vp.back() = cfg.d();
        std::vector<Coord> ntf(static_cast<std::size_t>(cfg.n()), 0);
        ntf[ntf.size() - 2] = 1;
        ntf.back() = cfg.d() - 1;
        expected = !(sorted == vp || sorted == ntf);
    }
    out.summary["two_full"] = r.two_full;
    out.summary["missing_count"] = r.missing.size();
    out.summary["expected_from_classification"] = expected;
    if (expected != r.two_full) {
        ordered_json v;
        v["kind"] = "two_full_vs_classification";
        v["expected"] = expected;
        v["computed"] = r.two_full;
        out.violations.push_back(v);
    }
    out.text.push_back("two_full=" + bool_text(r.two_full) + " missing=" +
                       std::to_string(r.missing.size()));
    for (const auto& q : r.missing) out.text.push_back("  missing " + q.to_string());
}

void cmd_min_chain(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    const Point& lam = require_lambda(p, "min-chain");
    auto ch = minimal_chain(cfg, Point::zero(cfg.n()), lam);
    out.params["lambda"] = point_json(lam);
    out.params["verify_oracles"] = p.verify_oracles;
    ordered_json rec;
    rec["lambda"] = point_json(lam);
    rec["links"] = points_json(ch.links());
    rec["a_degree"] = ch.a_degree();
    out.results.push_back(rec);
    out.summary["length"] = ch.length();
    out.summary["a_degree"] = ch.a_degree();
    out.text.push_back("minimal chain 0 -> " + lam.to_string() + ": " + ch.to_string() +
                       ", a-degree " + std::to_string(ch.a_degree()));
    if (p.verify_oracles) {
        auto base = minimal_chain_baseline(cfg, Point::zero(cfg.n()), lam, p.max_links);
        out.summary["oracle_checked"] = true;
        if (!(base == ch)) {
            ordered_json v;
            v["kind"] = "oracle_mismatch";
            v["baseline_links"] = points_json(base.links());
            out.violations.push_back(v);
            out.text.push_back("ORACLE MISMATCH: baseline " + base.to_string());
        }
    }
}

void cmd_groebner(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    auto rep = verify_groebner(cfg);
    ordered_json rec;
    rec["is_groebner"] = rep.is_groebner;
    rec["rule_count"] = rep.rule_count;
    rec["cubics_checked"] = rep.cubics_checked;
    out.results.push_back(rec);
    out.params["verify_oracles"] = p.verify_oracles;
    std::size_t confirmed = 0;
    for (const auto& ce : rep.counterexamples) {
        ordered_json v;
        v["kind"] = "confluence";
        v["cubic"] = monomial_json(ce.cubic);
        v["normal_form"] = monomial_json(ce.normal_form);
        v["true_minimal"] = monomial_json(ce.true_minimal);
        v["steps"] = ce.trace.size();
        if (p.verify_oracles) {
            auto target = ce.cubic.point_sum(cfg.n());
            auto base = minimal_chain_baseline(cfg, Point::zero(cfg.n()), target, p.max_links);
            auto links = base.links();
            std::sort(links.begin(), links.end());
            bool ok = links == ce.true_minimal.points();
            v["oracle_confirmed"] = ok;
            if (ok) ++confirmed;
        }
        out.violations.push_back(v);
        out.text.push_back("counterexample: " + ce.cubic.to_string() + " rewrites to " +
                           ce.normal_form.to_string() + " but the minimal chain is " +
                           ce.true_minimal.to_string());
    }
    out.summary["is_groebner"] = rep.is_groebner;
    out.summary["counterexamples"] = rep.counterexamples.size();
    if (p.verify_oracles) out.summary["oracle_confirmed"] = confirmed;
    out.text.insert(out.text.begin(),
                    "rules=" + std::to_string(rep.rule_count) + " cubics=" +
                        std::to_string(rep.cubics_checked) + " is_groebner=" +
                        bool_text(rep.is_groebner));
}

void betti_single(const GammaConfig& cfg, const RunParams& p, CommandOutput& out, bool ideal) {
    const char* name = ideal ? "betti-ideal" : "betti-field";
    const Point& lam = require_lambda(p, name);
    auto K = ideal ? divisor_complex(cfg, lam) : order_complex(cfg, lam, false);
    auto prof = reduced_homology_ranks(K, p.field);
    int degree = cfg.level_of(lam);
    out.params["lambda"] = point_json(lam);
    out.params["field"] = p.field.to_string();
    out.csv_supported = true;
    std::size_t entries = 0;
    for (const auto& [dim, rank] : prof.ranks) {
        if (rank == 0) continue;
        int i = ideal ? dim : dim + 2;
        ordered_json rec;
        rec["i"] = i;
        rec["lambda"] = point_json(lam);
        rec["rank"] = rank;
        rec["degree"] = degree;
        out.results.push_back(rec);
        out.csv.push_back(betti_csv_row(i, lam, rank, degree));
        out.text.push_back("i=" + std::to_string(i) + " lambda=" + lam.to_string() + " rank=" +
                           std::to_string(rank) + " degree=" + std::to_string(degree));
        ++entries;
        // The residue field stays on the linear strand exactly when the ring
        // is Koszul; off-strand ranks are reportable violations.
        if (!ideal && i != degree) {
            ordered_json v;
            v["kind"] = "off_linear_strand";
            v["i"] = i;
            v["lambda"] = point_json(lam);
            v["rank"] = rank;
            v["degree"] = degree;
            out.violations.push_back(v);
        }
    }
    out.summary["lambda"] = point_json(lam);
    out.summary["degree"] = degree;
    out.summary["entries"] = entries;
    out.summary["complex_dim"] = K.dim();
    if (p.verify_oracles && p.field.rational) {
        auto cross = reduced_homology_cross_checked(K);
        out.summary["fields_checked"] = 3;
        if (!cross.fields_agree) {
            ordered_json v;
            v["kind"] = "field_disagreement";
            v["lambda"] = point_json(lam);
            out.violations.push_back(v);
        }
    }
    if (entries == 0) out.text.push_back("no nonzero reduced homology at " + lam.to_string());
}

void cmd_koszul_scan(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    if (p.max_degree < 1) throw std::invalid_argument("koszul-scan requires max-degree >= 1");
    ScanOptions opts;
    opts.jobs = p.jobs;
    opts.cross_check_fields = p.verify_oracles;
    opts.progress = p.progress;
    auto rep = koszul_scan(cfg, p.max_degree, opts);
    out.params["max_degree"] = p.max_degree;
    out.params["jobs"] = p.jobs;
    out.params["verify_oracles"] = p.verify_oracles;
    out.csv_supported = true;
    for (const auto& e : rep.entries) {
        ordered_json rec;
        rec["i"] = e.i;
        rec["lambda"] = point_json(e.lambda);
        rec["rank"] = e.rank;
        rec["degree"] = e.degree;
        out.results.push_back(rec);
        out.csv.push_back(betti_csv_row(e.i, e.lambda, e.rank, e.degree));
    }
    for (const auto& e : rep.violations) {
        ordered_json v;
        v["kind"] = "off_linear_strand";
        v["i"] = e.i;
        v["lambda"] = point_json(e.lambda);
        v["rank"] = e.rank;
        v["degree"] = e.degree;
        out.violations.push_back(v);
        out.text.push_back("violation: beta_" + std::to_string(e.i) + " at " +
                           e.lambda.to_string() + " has degree " + std::to_string(e.degree));
    }
    for (const auto& lam : rep.purity_failures) {
        ordered_json v;
        v["kind"] = "purity_failure";
        v["lambda"] = point_json(lam);
        out.violations.push_back(v);
        out.text.push_back("violation: order complex of " + lam.to_string() + " is not pure");
    }
    for (const auto& lam : rep.field_disagreements) {
        ordered_json v;
        v["kind"] = "field_disagreement";
        v["lambda"] = point_json(lam);
        out.violations.push_back(v);
    }
    out.summary["max_degree"] = rep.max_degree;
    out.summary["lambdas_scanned"] = rep.lambdas_scanned;
    out.summary["entries"] = rep.entries.size();
    out.summary["violations"] = out.violations.size();
    out.summary["regularity"] = rep.regularity;
    out.text.insert(out.text.begin(),
                    "scanned " + std::to_string(rep.lambdas_scanned) + " lambdas to degree " +
                        std::to_string(rep.max_degree) + ": " +
                        std::to_string(rep.entries.size()) + " entries, " +
                        std::to_string(rep.violations.size()) + " violations, regularity " +
                        std::to_string(rep.regularity));
}

ordered_json facet_violation_json(const FacetViolation& v) {
    ordered_json o;
    o["kind"] = v.kind;
    o["lambda"] = point_json(v.lambda);
    o["chain"] = points_json(v.p.links());
    o["facets"] = faces_json(v.facets);
    auto ws = ordered_json::array();
    for (const auto& w : v.witnesses) ws.push_back(points_json(w.links()));
    o["witnesses"] = ws;
    return o;
}

void cmd_facet_lemmas(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    classification_warning(cfg, out);
    if (p.lambda) {
        auto rep = verify_facet_lemmas(cfg, *p.lambda, p.jobs, p.max_links);
        out.params["lambda"] = point_json(*p.lambda);
        out.params["jobs"] = p.jobs;
        out.params["max_links"] = p.max_links;
        std::size_t facets = 0;
        for (const auto& e : rep.entries) {
            ordered_json rec;
            rec["chain"] = points_json(e.p.links());
            rec["a_degree"] = e.p.a_degree();
            rec["facets"] = faces_json(e.facet_list);
            rec["all_ok"] = e.all_ok();
            rec["homology"] = profile_json(e.homology);
            rec["fields_agree"] = e.fields_agree;
            out.results.push_back(rec);
            facets += e.facet_list.size();
        }
        for (const auto& v : rep.violations) {
            out.violations.push_back(facet_violation_json(v));
            out.text.push_back("violation [" + v.kind + "] at " + v.lambda.to_string() +
                               " chain " + v.p.to_string());
        }
        out.summary["lambda"] = point_json(*p.lambda);
        out.summary["entries"] = rep.entries.size();
        out.summary["facets"] = facets;
        out.summary["outside_support_hypothesis"] = rep.outside_support_hypothesis;
        if (rep.outside_support_hypothesis)
            add_warning(out, "puncture has fewer than two positive coordinates; the facet "
                             "analysis is outside its standing hypothesis");
        out.text.insert(out.text.begin(), "lambda " + p.lambda->to_string() + ": " +
                                              std::to_string(rep.entries.size()) +
                                              " offending chains, " + std::to_string(facets) +
                                              " facets, " + std::to_string(rep.violations.size()) +
                                              " violations");
    } else {
        auto rep = facet_lemma_scan(cfg, p.min_level, p.max_level, p.jobs, p.max_links, p.progress);
        out.params["min_level"] = p.min_level;
        out.params["max_level"] = p.max_level;
        out.params["jobs"] = p.jobs;
        out.params["max_links"] = p.max_links;
        ordered_json rec;
        rec["min_level"] = rep.min_level;
        rec["max_level"] = rep.max_level;
        rec["lambdas_scanned"] = rep.lambdas_scanned;
        rec["chains_checked"] = rep.chains_checked;
        rec["facets_checked"] = rep.facets_checked;
        rec["field_disagreements"] = rep.field_disagreements;
        out.results.push_back(rec);
        for (const auto& v : rep.violations) {
            out.violations.push_back(facet_violation_json(v));
            out.text.push_back("violation [" + v.kind + "] at " + v.lambda.to_string() +
                               " chain " + v.p.to_string());
        }
        out.summary["lambdas_scanned"] = rep.lambdas_scanned;
        out.summary["chains_checked"] = rep.chains_checked;
        out.summary["facets_checked"] = rep.facets_checked;
        out.summary["violations"] = rep.violations.size();
        out.summary["outside_support_hypothesis"] = rep.outside_support_hypothesis;
        if (rep.outside_support_hypothesis)
            add_warning(out, "puncture has fewer than two positive coordinates; the facet "
                             "analysis is outside its standing hypothesis");
        out.text.insert(out.text.begin(),
                        "levels " + std::to_string(rep.min_level) + ".." +
                            std::to_string(rep.max_level) + ": " +
                            std::to_string(rep.lambdas_scanned) + " lambdas, " +
                            std::to_string(rep.chains_checked) + " chains, " +
                            std::to_string(rep.facets_checked) + " facets, " +
                            std::to_string(rep.violations.size()) + " violations");
    }
}

void cmd_homology_lemma(const GammaConfig* cfg, const RunParams& p, CommandOutput& out) {
    int nodes = p.nodes > 0 ? p.nodes : (cfg ? cfg->n() : 0);
    if (nodes <= 0) throw std::invalid_argument("homology-lemma requires a node count");
    if (!p.weak_form && !p.strong_form)
        throw std::invalid_argument("homology-lemma requires at least one form");
    out.params["nodes"] = nodes;
    out.params["weak"] = p.weak_form;
    out.params["strong"] = p.strong_form;
    std::size_t total = 0;
    for (bool weak : {true, false}) {
        if (weak && !p.weak_form) continue;
        if (!weak && !p.strong_form) continue;
        auto rep = verify_abstract_homology_lemma(nodes, weak);
        total += rep.patterns_checked;
        ordered_json rec;
        rec["form"] = weak ? "weak" : "strong";
        rec["nodes"] = nodes;
        rec["patterns_checked"] = rep.patterns_checked;
        rec["violations"] = rep.violations.size();
        out.results.push_back(rec);
        out.text.push_back(std::string(weak ? "weak" : "strong") + " form: " +
                           std::to_string(rep.patterns_checked) + " patterns, " +
                           std::to_string(rep.violations.size()) + " violations");
        for (const auto& v : rep.violations) {
            ordered_json o;
            o["form"] = weak ? "weak" : "strong";
            o["pattern"] = v.pattern.to_string();
            o["singles"] = ordered_json(v.pattern.singles);
            o["pairs"] = ordered_json(v.pattern.pairs);
            o["homology"] = profile_json(v.homology);
            o["fields_agree"] = v.fields_agree;
            out.violations.push_back(o);
            out.text.push_back("violation: " + v.pattern.to_string());
        }
    }
    out.summary["nodes"] = nodes;
    out.summary["patterns_checked"] = total;
    out.summary["violations"] = out.violations.size();
}

void cmd_mv_scan(const GammaConfig& cfg, const RunParams& p, CommandOutput& out) {
    classification_warning(cfg, out);
    const Point& lam = require_lambda(p, "mv-scan");
    auto rep = mayer_vietoris_scan(cfg, lam, p.max_links);
    out.params["lambda"] = point_json(lam);
    out.params["max_links"] = p.max_links;
    for (const auto& st : rep.stages) {
        ordered_json rec;
        rec["index"] = st.index;
        rec["chain"] = st.chain ? points_json(st.chain->links()) : ordered_json(nullptr);
        rec["homology"] = profile_json(st.homology);
        rec["low_nonzero"] = ordered_json(st.low_nonzero);
        out.results.push_back(rec);
        if (!st.low_nonzero.empty()) {
            ordered_json v;
            v["kind"] = "below_top_homology";
            v["stage"] = st.index;
            v["dimensions"] = ordered_json(st.low_nonzero);
            out.violations.push_back(v);
            out.text.push_back("violation: stage " + std::to_string(st.index) +
                               " has homology below the top dimension");
        }
    }
    out.summary["lambda"] = point_json(lam);
    out.summary["offending_count"] = rep.offending_count;
    out.summary["stages"] = rep.stages.size();
    out.summary["below_top_ok"] = rep.below_top_ok;
    out.summary["field_disagreements"] = rep.field_disagreements;
    out.summary["outside_support_hypothesis"] = rep.outside_support_hypothesis;
    if (rep.outside_support_hypothesis)
        add_warning(out, "puncture has fewer than two positive coordinates; the filtration "
                         "analysis is outside its standing hypothesis");
    out.text.insert(out.text.begin(), "lambda " + lam.to_string() + ": " +
                                          std::to_string(rep.offending_count) +
                                          " offending chains, " +
                                          std::to_string(rep.stages.size()) +
                                          " stages, below_top_ok=" +
                                          bool_text(rep.below_top_ok));
}

CommandOutput dispatch(const GammaConfig* cfg, const std::string& command, const RunParams& p) {
    CommandOutput out;
    if (command == "homology-lemma") {
        cmd_homology_lemma(cfg, p, out);
        return out;
    }
    if (!cfg) throw std::invalid_argument(command + " requires a configuration");
    const GammaConfig& c = *cfg;
    if (command == "points")
        cmd_points(c, p, out);
    else if (command == "member")
        cmd_member(c, p, out);
    else if (command == "two-full")
        cmd_two_full(c, p, out);
    else if (command == "min-chain")
        cmd_min_chain(c, p, out);
    else if (command == "groebner")
        cmd_groebner(c, p, out);
    else if (command == "betti-ideal")
        betti_single(c, p, out, true);
    else if (command == "betti-field")
        betti_single(c, p, out, false);
    else if (command == "koszul-scan")
        cmd_koszul_scan(c, p, out);
    else if (command == "facet-lemmas")
        cmd_facet_lemmas(c, p, out);
    else if (command == "mv-scan")
        cmd_mv_scan(c, p, out);
    else
        throw std::invalid_argument("unknown command: " + command);
    return out;
}

} // namespace

FieldDescriptor parse_field(const std::string& text) {
    if (text == "q") return FieldDescriptor::rationals();
    if (text.rfind("p:", 0) == 0) {
        const std::string num = text.substr(2);
        std::size_t idx = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(num, &idx);
        } catch (const std::exception&) {
            throw std::invalid_argument("field must be q or p:<prime>");
        }
        if (idx != num.size() || v > 0x7fffffffUL)
            throw std::invalid_argument("field must be q or p:<prime>");
        return FieldDescriptor::prime(static_cast<std::uint32_t>(v));
    }
    throw std::invalid_argument("field must be q or p:<prime>");
}

Point parse_point(const std::string& text) {
    std::vector<Coord> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        std::size_t idx = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &idx);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate list: " + text);
        }
        if (idx != token.size()) throw std::invalid_argument("bad coordinate list: " + text);
        coords.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coords.empty()) throw std::invalid_argument("bad coordinate list: " + text);
    return Point(std::move(coords));
}

RunResult run_command(const GammaConfig* cfg, const std::string& command, const RunParams& params,
                      const std::string& format) {
    if (format != "json" && format != "csv" && format != "text")
        throw std::invalid_argument("format must be json, csv or text");
    auto t0 = std::chrono::steady_clock::now();
    CommandOutput out = dispatch(cfg, command, params);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    RunResult r;
    r.violations = !out.violations.empty();
    if (format == "json") {
        ordered_json env;
        env["command"] = command;
        if (cfg) {
            ordered_json c;
            c["n"] = cfg->n();
            c["d"] = cfg->d();
            c["a"] = cfg->puncture() ? point_json(*cfg->puncture()) : ordered_json("none");
            c["classification"] = to_string(cfg->classification());
            if (cfg->puncture_unsorted()) c["puncture_unsorted"] = true;
            env["config"] = c;
        } else {
            env["config"] = nullptr;
        }
        env["params"] = out.params;
        env["results"] = out.results;
        env["violations"] = out.violations;
        env["summary"] = out.summary;
        env["runtime_ms"] = ms;
        r.output = env.dump() + "\n";
    } else if (format == "csv") {
        if (!out.csv_supported)
            throw std::invalid_argument(
                "csv output is only defined for betti-ideal, betti-field and koszul-scan");
        std::string s = "i,lambda,rank,degree\n";
        for (const auto& row : out.csv) s += row + "\n";
        r.output = s;
    } else {
        std::string s = "koszul-lab " + command + "\n";
        if (cfg) {
            s += "config: n=" + std::to_string(cfg->n()) + " d=" + std::to_string(cfg->d()) +
                 " a=" + (cfg->puncture() ? cfg->puncture()->to_string() : "none") + " " +
                 to_string(cfg->classification()) + "\n";
        }
        for (const auto& line : out.text) s += line + "\n";
        s += "violations: " + std::to_string(out.violations.size()) + "\n";
        s += "runtime_ms: " + std::to_string(ms) + "\n";
        r.output = s;
    }
    return r;
}

} // namespace koszul
