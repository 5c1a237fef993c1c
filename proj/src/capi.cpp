#include "koszul_lab.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "koszul/betti.hpp"
#include "koszul/errors.hpp"
#include "koszul/gamma.hpp"
#include "koszul/point.hpp"
#include "koszul/report.hpp"

struct koszul_gamma {
    koszul::GammaConfig cfg;
};

namespace {

thread_local std::string g_last_error;

koszul_status fail(koszul_status s, const char* what) {
    g_last_error = what;
    return s;
}

template <typename F>
koszul_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return KOSZUL_OK;
    } catch (const koszul::NotInSemigroupError& e) {
        g_last_error = e.what();
        return KOSZUL_NOT_IN_SEMIGROUP;
    } catch (const koszul::LimitExceededError& e) {
        g_last_error = e.what();
        return KOSZUL_LIMIT_EXCEEDED;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return KOSZUL_INVALID_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return KOSZUL_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KOSZUL_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return KOSZUL_INTERNAL_ERROR;
    }
}

koszul::Point make_point(const int64_t* coords, int n) {
    return koszul::Point(std::vector<koszul::Coord>(coords, coords + n));
}

// Strict parameter mapping: every member must be known and well-typed.
void apply_params(const nlohmann::json& j, koszul::RunParams& rp, std::string& format) {
    if (!j.is_object()) throw std::invalid_argument("params must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "lambda") {
            if (value.is_string())
                rp.lambda = koszul::parse_point(value.get<std::string>());
            else
                rp.lambda = koszul::Point(value.get<std::vector<koszul::Coord>>());
        } else if (key == "level") {
            rp.level = value.get<int>();
        } else if (key == "max_degree") {
            rp.max_degree = value.get<int>();
        } else if (key == "max_links") {
            rp.max_links = value.get<int>();
        } else if (key == "min_level") {
            rp.min_level = value.get<int>();
        } else if (key == "max_level") {
            rp.max_level = value.get<int>();
        } else if (key == "nodes") {
            rp.nodes = value.get<int>();
        } else if (key == "form") {
            const std::string form = value.get<std::string>();
            if (form == "weak") {
                rp.weak_form = true;
                rp.strong_form = false;
            } else if (form == "strong") {
                rp.weak_form = false;
                rp.strong_form = true;
            } else if (form == "both") {
                rp.weak_form = true;
                rp.strong_form = true;
            } else {
                throw std::invalid_argument("form must be weak, strong or both");
            }
        } else if (key == "field") {
            rp.field = koszul::parse_field(value.get<std::string>());
        } else if (key == "jobs") {
            rp.jobs = value.get<int>();
            if (rp.jobs < 1) throw std::invalid_argument("jobs must be positive");
        } else if (key == "verify_oracles") {
            rp.verify_oracles = value.get<bool>();
        } else if (key == "format") {
            format = value.get<std::string>();
        } else {
            throw std::invalid_argument("unknown parameter: " + key);
        }
    }
}

char* copy_string(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

} // namespace

extern "C" {

const char* koszul_version(void) { return "0.1.0"; }

const char* koszul_last_error(void) { return g_last_error.c_str(); }

koszul_status koszul_gamma_create(int32_t n, int32_t d, const int64_t* puncture,
                                  koszul_gamma** out) {
    if (!out) return fail(KOSZUL_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        std::optional<koszul::Point> a;
        if (puncture) {
            if (n < 1) throw std::invalid_argument("n must be positive");
            a = make_point(puncture, n);
        }
        auto cfg = koszul::GammaConfig::make(n, d, std::move(a));
        *out = new koszul_gamma{std::move(cfg)};
    });
}

void koszul_gamma_destroy(koszul_gamma* gamma) { delete gamma; }

koszul_status koszul_classification(const koszul_gamma* gamma, char* buf, size_t len) {
    if (!gamma || !buf) return fail(KOSZUL_INVALID_ARGUMENT, "null argument");
    const char* name = koszul::to_string(gamma->cfg.classification());
    size_t need = std::strlen(name) + 1;
    if (len < need) return fail(KOSZUL_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buf, name, need);
    g_last_error.clear();
    return KOSZUL_OK;
}

koszul_status koszul_member(const koszul_gamma* gamma, const int64_t* lambda, int32_t use_full,
                            int32_t* out_member) {
    if (!gamma || !lambda || !out_member) return fail(KOSZUL_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_member = gamma->cfg.member(make_point(lambda, gamma->cfg.n()), use_full != 0) ? 1 : 0;
    });
}

koszul_status koszul_betti_ideal(const koszul_gamma* gamma, const int64_t* lambda, int32_t i,
                                 uint64_t* out_rank) {
    if (!gamma || !lambda || !out_rank) return fail(KOSZUL_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_rank = koszul::betti_ideal(gamma->cfg, make_point(lambda, gamma->cfg.n()), i);
    });
}

koszul_status koszul_betti_field(const koszul_gamma* gamma, const int64_t* lambda, int32_t i,
                                 uint64_t* out_rank) {
    if (!gamma || !lambda || !out_rank) return fail(KOSZUL_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_rank = koszul::betti_field(gamma->cfg, make_point(lambda, gamma->cfg.n()), i);
    });
}

koszul_status koszul_run(koszul_gamma* gamma, const char* command, const char* params_json,
                         koszul_progress_fn progress, void* user, char** out_report,
                         int32_t* out_violations) {
    if (!command || !out_report) return fail(KOSZUL_INVALID_ARGUMENT, "null argument");
    *out_report = nullptr;
    return guarded([&] {
        koszul::RunParams rp;
        std::string format = "json";
        if (params_json && *params_json)
            apply_params(nlohmann::json::parse(params_json), rp, format);
        if (progress)
            rp.progress = [progress, user](std::size_t done, std::size_t total) {
                progress(done, total, user);
            };
        auto res = koszul::run_command(gamma ? &gamma->cfg : nullptr, command, rp, format);
        *out_report = copy_string(res.output);
        if (out_violations) *out_violations = res.violations ? 1 : 0;
    });
}

void koszul_string_free(char* s) { std::free(s); }

} // extern "C"
