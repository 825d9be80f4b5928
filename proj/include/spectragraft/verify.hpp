#ifndef SPECTRAGRAFT_VERIFY_HPP
#define SPECTRAGRAFT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectragraft/graph.hpp"

namespace spectragraft {

enum class TreeClass {
    all,
    non_caterpillar,          // T-class
    non_starlike,             // R-class
    non_cat_non_star,         // intersection
    non_cat_non_star_4pendant // intersection restricted to 4 pendant vertices
};

enum class Direction { min, max };

struct ExtremalQuery {
    int n = 0;
    TreeClass cls = TreeClass::all;
    Direction dir = Direction::min;
};

/// Arg-extremum of rho_Q over a tree class. Ties lists every other member
/// whose rho lies within kTieTolerance * rho of the extremal value.
struct ExtremalResult {
    bool vacuous = false;
    long class_size = 0;
    std::string code;
    double rho = 0.0;
    std::optional<Graph> graph;
    std::optional<double> margin; // |rho - runner-up|, absent for singleton classes
    std::vector<std::string> ties;
};

ExtremalResult find_extremal(const ExtremalQuery& query, int jobs = 1);

/// Per-claim, per-order verification outcome. status is one of
/// "verified", "counterexample", "vacuous", "tied".
struct ClaimEntry {
    std::string claim;
    int n = 0;
    long class_size = 0; // class members (extremal claims) or configurations checked (sweeps)
    std::string status;
    std::string extremal_code;
    std::string expected_code;
    std::optional<double> rho_extremal;
    std::optional<double> margin;
    std::vector<std::string> ties;
    double elapsed_ms = 0.0;
    std::string definition;
    std::optional<std::string> realized;             // extra facts, e.g. the (t1,t2) attained by claim 3.3
    std::optional<std::string> counterexample;       // inline edge list, replayable via the CLI
    std::optional<std::string> counterexample_detail;
};

struct RunOptions {
    int n_min = -1; // -1: claim default
    int n_max = -1;
    int jobs = 1;
    std::uint64_t seed = 12345; // only feeds the random vectors of the invariant sweep
};

bool is_valid_claim(const std::string& id);
const std::vector<std::string>& claim_catalog();

/// Runs one claim ("2.1".."3.6") or "all" over the resolved order range.
std::vector<ClaimEntry> run_claim(const std::string& id, const RunOptions& opts);

/// 0 = all verified/vacuous, 1 = any counterexample, 3 = any numeric tie.
int exit_code_for(const std::vector<ClaimEntry>& entries);

struct ReportMeta {
    std::string claim;
    int n_min = -1;
    int n_max = -1;
    std::uint64_t seed = 12345;
};

std::string report_json(const std::vector<ClaimEntry>& entries, const ReportMeta& meta);
std::string report_csv_from_json(const std::string& json_text);
std::string human_summary(const std::vector<ClaimEntry>& entries);

/// Parses "all", "non-caterpillar", "non-starlike", "intersection" or
/// "pendants=<k>" into a predicate over trees.
std::function<bool(const Graph&)> parse_tree_filter(std::string_view text);

} // namespace spectragraft

#endif
