#pragma once

#include <functional>
#include <optional>
#include <string>

#include "koszul/gamma.hpp"
#include "koszul/point.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

// Knobs shared by every command; each command reads the subset it needs.
struct RunParams {
    std::optional<Point> lambda;
    int level = 1;      // points
    int max_degree = 4; // koszul-scan
    int max_links = 7;
    int min_level = 2; // facet-lemmas without a fixed lambda
    int max_level = 4;
    int nodes = 0; // homology-lemma; 0 falls back to the configuration's n
    bool weak_form = true;
    bool strong_form = true;
    FieldDescriptor field = FieldDescriptor::rationals();
    int jobs = 1;
    bool verify_oracles = false;
    std::function<void(std::size_t, std::size_t)> progress;
};

struct RunResult {
    std::string output;      // serialized report in the requested format
    bool violations = false; // true when the report carries violation records
};

// Executes one named command and serializes the outcome. Commands: points,
// member, two-full, min-chain, groebner, betti-ideal, betti-field,
// koszul-scan, facet-lemmas, homology-lemma, mv-scan. format is "json",
// "csv" (Betti-bearing commands only) or "text". cfg may be null only for
// homology-lemma, which needs no semigroup. The JSON envelope is
// deterministic for fixed inputs except for the top-level runtime_ms field.
// Throws std::invalid_argument for unknown commands, missing required
// parameters, or an unsupported format; domain errors from the underlying
// operations pass through.
RunResult run_command(const GammaConfig* cfg, const std::string& command, const RunParams& params,
                      const std::string& format);

// Parses "q" or "p:<prime>" into a field choice; throws std::invalid_argument.
FieldDescriptor parse_field(const std::string& text);

// Parses "1,2,3" into a point; throws std::invalid_argument on junk.
Point parse_point(const std::string& text);

} // namespace koszul
