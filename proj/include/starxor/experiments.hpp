#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "starxor/automata.hpp"
#include "starxor/modifiers.hpp"
#include "starxor/report.hpp"

namespace starxor {

struct ExperimentOptions {
  unsigned jobs = 1;
  std::uint64_t cap_states = kDefaultStateCap;
  std::uint64_t cap_letters = kDefaultLetterCap;
  /// Upper bound on 2^(n1*n2) * letters, the worst-case transition table of
  /// a full-monster construction.
  std::uint64_t cap_transitions = std::uint64_t{1} << 28;
};

enum class ScMethod { formula, full_monster, witness, all };

ScMethod parse_method(std::string_view name);
std::string_view to_string(ScMethod m);

/// Tableau-count route: enumerates the tableaux behind the formula when
/// n1 * n2 is small enough, and reports the formula value alone otherwise.
ExperimentReport measure_formula(std::size_t n1, std::size_t n2);

/// Minimized stx of the (F1, F2) 2-monster, compared to predicted_complexity.
ExperimentReport measure_full_monster(std::size_t n1, std::size_t n2, const std::vector<State>& f1,
                                      const std::vector<State>& f2,
                                      const ExperimentOptions& options = {});

/// One report per requested method; with ScMethod::all, a parent report that
/// passes only if every measured value is equal.
ExperimentReport cmd_sc(std::size_t n1, std::size_t n2, ScMethod method,
                        const ExperimentOptions& options = {});

/// Minimized stx size for every final-set pair (F1, F2); passes iff the
/// maximum is attained at ({n1-1}, {0}).
ExperimentReport cmd_sweep_finals(std::size_t n1, std::size_t n2,
                                  const ExperimentOptions& options = {});

/// CSV with columns n1,n2,F1,F2,measured,predicted,verdict from a sweep report.
std::string sweep_csv(const ExperimentReport& sweep);

/// Rebuilt example automata with their hard-coded drawings.
struct Figures {
  Dfa example1;         // Mon_2^{1}
  ModifiedDfa figure1;  // Star(Mon_2^{1}), all four subsets
  Dfa figure2;          // C = preimage of Mon_2^{1} with a -> [0 1], b -> [1 1]
  ModifiedDfa figure3;  // Star(C), all four subsets
};

Figures build_figures();
ExperimentReport cmd_verify_figures();

struct ExportRequest {
  /// example1, figure1, figure2, figure3, monster, witness, stx-witness, alpha, sweep
  std::string what;
  /// dot, json or csv
  std::string format;
  std::size_t n1 = 2, n2 = 2;
  std::size_t max_size = 4;
};

/// Deterministic file content for `request`.
std::string render_export(const ExportRequest& request, const ExperimentOptions& options = {});

/// Writes render_export(request) to `out`; "-" means standard output.
ExperimentReport cmd_export(const ExportRequest& request, const std::filesystem::path& out,
                            const ExperimentOptions& options = {});

}  // namespace starxor
