#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadlab/problem.hpp"
#include "cadlab/random_problems.hpp"

namespace cadlab {

struct BenchRow {
  std::string problem;
  std::string heuristic;
  std::string ordering;
  std::string designation = "none";
  std::string mode = "sign";
  std::optional<std::size_t> cells;
  std::optional<std::size_t> fulldim_cells;
  std::optional<double> time_ms;
  std::string status = "ok";  ///< ok, timeout, not_well_oriented, error
  std::string message;
};

struct BenchConfig {
  std::vector<std::string> heuristics{"brown", "sotd", "greedy-sotd", "ndrr", "fulldim"};
  bool all_orderings = true;
  bool designations = true;  ///< ec-mode rows for problems with equational constraints
  std::uint64_t timeout_ms = 0;  ///< 0 = none
  std::size_t jobs = 1;
  bool stable = false;  ///< blank the timing column
};

struct BenchInput {
  std::string label;  ///< file name or generated problem name
  std::optional<Problem> problem;
  std::string load_error;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Problems on which a heuristic's ordering had strictly fewer cells than every other heuristic's.
  std::map<std::string, std::size_t> unique_wins;
};

/// Problem files (*.json, *.smt2, *.smt) in name order; unreadable files become error inputs.
std::vector<BenchInput> load_corpus(const std::filesystem::path& dir);

/// Per problem: one "order" row per admissible ordering, one row per
/// heuristic for its chosen ordering, and ec rows for designations chosen
/// by sotd and ndrr. Failures are recorded per row.
BenchReport run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& config);

inline constexpr const char* kCsvHeader = "problem,heuristic,ordering,designation,mode,cells,fulldim_cells,time_ms,status";

std::string to_csv(const BenchReport& report, bool stable);
std::string to_json(const BenchReport& report, bool stable);

/// Parses a CSV written by to_csv.
std::vector<BenchRow> parse_csv(const std::string& text);

/// Computes unique wins from the heuristic rows.
std::map<std::string, std::size_t> unique_wins(const std::vector<BenchRow>& rows);

}  // namespace cadlab
