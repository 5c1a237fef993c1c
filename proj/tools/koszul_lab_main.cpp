#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "koszul_lab.h"

namespace {

struct ProgressState {
    uint64_t last = 0;
};

// Throttled progress for long scans; standard output stays machine-clean.
extern "C" void print_progress(uint64_t done, uint64_t total, void* user) {
    auto* st = static_cast<ProgressState*>(user);
    if (total == 0) return;
    uint64_t step = total / 20 > 0 ? total / 20 : 1;
    if (done == total || done == 1 || done - st->last >= step) {
        std::fprintf(stderr, "progress: %" PRIu64 "/%" PRIu64 "\n", done, total);
        st->last = done;
    }
}

bool parse_puncture(const std::string& text, std::vector<int64_t>& out) {
    out.clear();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t idx = 0;
            out.push_back(std::stoll(token, &idx));
            if (idx != token.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return !out.empty();
}

int run(const std::string& command, koszul_gamma* gamma, const nlohmann::json& params,
        bool with_progress) {
    ProgressState state;
    char* report = nullptr;
    int32_t violations = 0;
    const std::string text = params.dump();
    koszul_status status = koszul_run(gamma, command.c_str(), text.c_str(),
                                      with_progress ? print_progress : nullptr,
                                      with_progress ? &state : nullptr, &report, &violations);
    if (status != KOSZUL_OK) {
        std::fprintf(stderr, "error: %s\n", koszul_last_error());
        return 2;
    }
    std::fputs(report, stdout);
    koszul_string_free(report);
    return violations ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for Koszulness of pinched Veronese semigroup rings"};
    app.require_subcommand(1);

    int n = 0, d = 0;
    std::string puncture = "none";
    std::string lambda;
    std::string field = "q";
    std::string format = "json";
    std::string form = "both";
    int level = 1, max_degree = 4, max_links = 7, min_level = 2, max_level = 4, jobs = 0;
    bool verify_oracles = false, allow_large = false;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("-n", n, "ambient dimension")->required();
        sub->add_option("-d", d, "slice degree")->required();
        sub->add_option("-a", puncture, "removed generator as comma-separated coordinates, or \"none\"");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* c_points = app.add_subcommand("points", "list semigroup members of one level");
    add_config(c_points);
    c_points->add_option("--level", level, "level to enumerate");
    add_format(c_points);

    auto* c_member = app.add_subcommand("member", "semigroup membership of one lambda");
    add_config(c_member);
    c_member->add_option("--lambda", lambda, "query point")->required();
    add_format(c_member);

    auto* c_twofull = app.add_subcommand("two-full", "check whether the generators cover the doubled slice");
    add_config(c_twofull);
    add_format(c_twofull);

    auto* c_minchain = app.add_subcommand("min-chain", "minimal chain from the origin to lambda");
    add_config(c_minchain);
    c_minchain->add_option("--lambda", lambda, "chain endpoint")->required();
    c_minchain->add_option("--max-links", max_links, "safety cap on chain length");
    c_minchain->add_flag("--verify-oracles", verify_oracles, "cross-check against the brute-force baseline");
    add_format(c_minchain);

    auto* c_groebner = app.add_subcommand("groebner", "exhaustive cubic confluence check of the quadratic rewriting basis");
    add_config(c_groebner);
    c_groebner->add_flag("--verify-oracles", verify_oracles, "re-verify counterexample minima by enumeration");
    add_format(c_groebner);

    auto* c_bideal = app.add_subcommand("betti-ideal", "Betti numbers of the toric ideal at one lambda");
    add_config(c_bideal);
    c_bideal->add_option("--lambda", lambda, "multidegree")->required();
    c_bideal->add_option("--field", field, "homology coefficients: q or p:<prime>");
    c_bideal->add_flag("--verify-oracles", verify_oracles, "cross-check ranks over three fields");
    add_format(c_bideal);

    auto* c_bfield = app.add_subcommand("betti-field", "Betti numbers of the residue field at one lambda");
    add_config(c_bfield);
    c_bfield->add_option("--lambda", lambda, "multidegree")->required();
    c_bfield->add_option("--field", field, "homology coefficients: q or p:<prime>");
    c_bfield->add_flag("--verify-oracles", verify_oracles, "cross-check ranks over three fields");
    add_format(c_bfield);

    auto* c_scan = app.add_subcommand("koszul-scan", "linear-strand scan of all Betti numbers up to a degree");
    add_config(c_scan);
    c_scan->add_option("--max-degree", max_degree, "scan bound on |lambda|");
    c_scan->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    c_scan->add_flag("--verify-oracles", verify_oracles, "cross-check every rank over three fields");
    c_scan->add_flag("--allow-large", allow_large, "permit max-degree above 5");
    add_format(c_scan);

    auto* c_facet = app.add_subcommand("facet-lemmas", "structural checks on lower intersections of offending chains");
    add_config(c_facet);
    c_facet->add_option("--lambda", lambda, "single multidegree (default: scan a level range)");
    c_facet->add_option("--min-level", min_level, "scan start level");
    c_facet->add_option("--max-level", max_level, "scan end level");
    c_facet->add_option("--max-links", max_links, "safety cap on chain length");
    c_facet->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    add_format(c_facet);

    auto* c_lemma = app.add_subcommand("homology-lemma", "vanishing checks for the admissible facet patterns");
    c_lemma->add_option("-n", n, "node count (3..8)")->required();
    c_lemma->add_option("--form", form, "weak, strong or both")
        ->check(CLI::IsMember({"weak", "strong", "both"}));
    add_format(c_lemma);

    auto* c_mv = app.add_subcommand("mv-scan", "stagewise homology of the chain filtration at one lambda");
    add_config(c_mv);
    c_mv->add_option("--lambda", lambda, "multidegree")->required();
    c_mv->add_option("--max-links", max_links, "safety cap on chain length");
    add_format(c_mv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    nlohmann::json params = nlohmann::json::object();
    params["format"] = format;
    if (!lambda.empty()) params["lambda"] = lambda;

    int resolved_jobs = jobs;
    if (resolved_jobs < 1)
        resolved_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    if (command == "points") params["level"] = level;
    if (command == "min-chain" || command == "groebner")
        params["verify_oracles"] = verify_oracles;
    if (command == "betti-ideal" || command == "betti-field") {
        params["field"] = field;
        params["verify_oracles"] = verify_oracles;
    }
    if (command == "koszul-scan") {
        if (max_degree > 5 && !allow_large) {
            std::fprintf(stderr,
                         "error: max-degree %d above 5 needs --allow-large (combinatorial blowup)\n",
                         max_degree);
            return 2;
        }
        if (max_degree == 5)
            std::fprintf(stderr, "warning: max-degree 5 can take a long time\n");
        params["max_degree"] = max_degree;
        params["jobs"] = resolved_jobs;
        params["verify_oracles"] = verify_oracles;
    }
    if (command == "facet-lemmas") {
        if (lambda.empty()) {
            params["min_level"] = min_level;
            params["max_level"] = max_level;
        }
        params["max_links"] = max_links;
        params["jobs"] = resolved_jobs;
    }
    if (command == "min-chain" || command == "mv-scan") params["max_links"] = max_links;
    if (command == "homology-lemma") {
        params["nodes"] = n;
        params["form"] = form;
    }

    koszul_gamma* gamma = nullptr;
    if (command != "homology-lemma") {
        std::vector<int64_t> coords;
        const int64_t* a = nullptr;
        if (puncture != "none") {
            if (!parse_puncture(puncture, coords) || static_cast<int>(coords.size()) != n) {
                std::fprintf(stderr, "error: -a needs %d comma-separated coordinates or \"none\"\n", n);
                return 2;
            }
            a = coords.data();
        }
        koszul_status status = koszul_gamma_create(n, d, a, &gamma);
        if (status != KOSZUL_OK) {
            std::fprintf(stderr, "error: %s\n", koszul_last_error());
            return 2;
        }
    }

    bool with_progress = command == "koszul-scan" || (command == "facet-lemmas" && lambda.empty());
    int code = run(command, gamma, params, with_progress);
    koszul_gamma_destroy(gamma);
    return code;
}
