#include "starxor/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "starxor/monsters.hpp"
#include "starxor/tableaux.hpp"
#include "starxor/witness.hpp"

namespace starxor {

namespace {

std::vector<State> mask_to_set(std::uint64_t mask, std::size_t n) {
  std::vector<State> out;
  for (std::size_t q = 0; q < n; ++q) {
    if (mask >> q & 1) out.push_back(static_cast<State>(q));
  }
  return out;
}

std::string set_text(const std::vector<State>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// Throws ResourceLimitError when a full-monster construction at (n1, n2) is over a cap.
std::uint64_t check_full_monster_caps(std::size_t n1, std::size_t n2,
                                      const ExperimentOptions& options) {
  const MonsterSpec spec{{n1, n2}, {{}, {}}};
  const auto letters = spec.letter_count(options.cap_letters);
  const auto cells = n1 * n2;
  if (cells >= 63 || (std::uint64_t{1} << cells) > options.cap_states) {
    throw ResourceLimitError("2^" + std::to_string(cells) + " subset states exceed the state cap of " +
                             std::to_string(options.cap_states));
  }
  const auto states = std::uint64_t{1} << cells;
  if (letters > options.cap_transitions / states) {
    throw ResourceLimitError("2^" + std::to_string(cells) + " states x " + std::to_string(letters) +
                             " letters exceed the transition cap of " +
                             std::to_string(options.cap_transitions));
  }
  return letters;
}

Dfa with_finals(const Dfa& a, const std::vector<State>& finals) {
  return Dfa(a.state_count(), a.letter_count(), a.initial(), finals, a.delta(), a.letter_labels());
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Hard-coded drawings of the example automata.
struct Edge {
  std::string from;
  std::vector<std::string> letters;
  std::string to;
};

struct Drawing {
  std::string name;
  std::map<std::string, State> states;
  std::map<std::string, Letter> letters;
  std::vector<Edge> edges;
  std::vector<std::string> finals;
  std::vector<std::string> non_finals;
};

ExperimentReport check_drawing(const Dfa& a, const Drawing& d) {
  ExperimentReport r;
  r.command = "verify-figures";
  r.parameters = {{"figure", d.name}};
  std::size_t checked = 0, matched = 0;
  auto mismatches = nlohmann::ordered_json::array();
  for (const auto& e : d.edges) {
    for (const auto& l : e.letters) {
      ++checked;
      const auto got = a.next(d.states.at(e.from), d.letters.at(l));
      if (got == d.states.at(e.to)) {
        ++matched;
      } else {
        mismatches.push_back(e.from + " --" + l + "--> " + e.to);
      }
    }
  }
  for (const auto& s : d.finals) {
    ++checked;
    if (a.is_final(d.states.at(s))) ++matched; else mismatches.push_back(s + " should be final");
  }
  for (const auto& s : d.non_finals) {
    ++checked;
    if (!a.is_final(d.states.at(s))) ++matched; else mismatches.push_back(s + " should not be final");
  }
  r.measured = matched;
  r.predicted = checked;
  r.verdict = matched == checked ? Verdict::pass : Verdict::fail;
  if (!mismatches.empty()) r.details = {{"mismatches", mismatches}};
  return r;
}

std::map<std::string, Letter> bracket_letters() {
  // "[ij]" sends 0 to i and 1 to j
  std::map<std::string, Letter> m;
  for (State i = 0; i < 2; ++i) {
    for (State j = 0; j < 2; ++j) {
      m[std::to_string(i) + std::to_string(j)] = static_cast<Letter>(Transformation({i, j}).rank());
    }
  }
  return m;
}

const std::map<std::string, State> kSubsetStates = {{"{}", 0}, {"{0}", 1}, {"{1}", 2}, {"{0,1}", 3}};

std::string pair_json(const DfaPair& p) {
  nlohmann::ordered_json j;
  j["first"] = nlohmann::ordered_json::parse(export_json(p.first));
  j["second"] = nlohmann::ordered_json::parse(export_json(p.second));
  return j.dump(2) + "\n";
}

// Timings are the only nondeterministic part of a report.
void drop_timings(nlohmann::ordered_json& j) {
  if (j.is_object()) j.erase("wall_time_ms");
  if (j.is_structured())
    for (auto& child : j) drop_timings(child);
}

std::string pair_dot(const DfaPair& p) {
  return export_dot(p.first, {}, "first") + export_dot(p.second, {}, "second");
}

}  // namespace

ScMethod parse_method(std::string_view name) {
  if (name == "formula") return ScMethod::formula;
  if (name == "full-monster") return ScMethod::full_monster;
  if (name == "witness") return ScMethod::witness;
  if (name == "all") return ScMethod::all;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected formula, full-monster, witness or all)");
}

std::string_view to_string(ScMethod m) {
  switch (m) {
    case ScMethod::formula:
      return "formula";
    case ScMethod::full_monster:
      return "full-monster";
    case ScMethod::witness:
      return "witness";
    case ScMethod::all:
      return "all";
  }
  return "unknown";
}

ExperimentReport measure_formula(std::size_t n1, std::size_t n2) {
  Stopwatch clock;
  ExperimentReport r;
  r.command = "sc";
  r.parameters = {{"n1", n1}, {"n2", n2}, {"method", "formula"}};
  const auto predicted = predicted_complexity(n1, n2);
  r.predicted = predicted;
  if (n1 * n2 <= kExhaustiveCellLimit) {
    r.measured = count_constrained(FinalZone::extremal(n1, n2));
    r.details = {{"measured_by", "tableau enumeration"}};
  } else {
    r.measured = predicted;
    r.details = {{"measured_by", "formula only; tableau enumeration over budget"}};
  }
  r.verdict = r.measured == r.predicted ? Verdict::pass : Verdict::fail;
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

ExperimentReport measure_full_monster(std::size_t n1, std::size_t n2, const std::vector<State>& f1,
                                      const std::vector<State>& f2,
                                      const ExperimentOptions& options) {
  Stopwatch clock;
  ExperimentReport r;
  r.command = "sc";
  r.parameters = {{"n1", n1}, {"n2", n2}, {"method", "full-monster"}, {"F1", f1}, {"F2", f2}};
  try {
    check_full_monster_caps(n1, n2, options);
    const auto monster = monster2({{n1, n2}, {f1, f2}}, options.cap_letters);
    const auto measured = minimized_stx_size(monster.first, monster.second, options.cap_states);
    const auto predicted = predicted_complexity(n1, n2);
    r.measured = measured;
    r.predicted = predicted;
    r.verdict = measured == predicted ? Verdict::pass : Verdict::fail;
  } catch (const ResourceLimitError& e) {
    r.verdict = Verdict::skipped;
    r.reason = e.what();
  }
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

ExperimentReport cmd_sc(std::size_t n1, std::size_t n2, ScMethod method,
                        const ExperimentOptions& options) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("sc: n1 and n2 must be positive");
  const std::vector<State> f1{static_cast<State>(n1 - 1)}, f2{0};
  switch (method) {
    case ScMethod::formula:
      return measure_formula(n1, n2);
    case ScMethod::full_monster:
      return measure_full_monster(n1, n2, f1, f2, options);
    case ScMethod::witness:
      return verify_witness(n1, n2, options.cap_states);
    case ScMethod::all:
      break;
  }
  Stopwatch clock;
  ExperimentReport r;
  r.command = "sc";
  r.parameters = {{"n1", n1}, {"n2", n2}, {"method", "all"}};
  r.children.push_back(measure_formula(n1, n2));
  r.children.push_back(measure_full_monster(n1, n2, f1, f2, options));
  if (n1 >= 2 && n2 >= 2) {
    r.children.push_back(verify_witness(n1, n2, options.cap_states));
  }
  r.measured = nlohmann::ordered_json::object();
  bool skipped = false;
  std::vector<std::uint64_t> values;
  for (const auto& c : r.children) {
    const std::string name = c.parameters["method"];
    if (c.verdict == Verdict::skipped) {
      skipped = true;
      continue;
    }
    r.measured[name] = c.measured;
    values.push_back(c.measured.get<std::uint64_t>());
  }
  r.predicted = predicted_complexity(n1, n2);
  const bool all_equal =
      std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
  if (!all_equal) {
    r.verdict = Verdict::fail;
    r.reason = "methods disagree";
  } else if (skipped || values.size() < 2) {
    r.verdict = Verdict::skipped;
    r.reason = "not every method could run";
  } else {
    r.verdict = Verdict::pass;
  }
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

ExperimentReport cmd_sweep_finals(std::size_t n1, std::size_t n2,
                                  const ExperimentOptions& options) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("sweep-finals: n1 and n2 must be positive");
  Stopwatch clock;
  ExperimentReport r;
  r.command = "sweep-finals";
  r.parameters = {{"n1", n1}, {"n2", n2}};
  try {
    check_full_monster_caps(n1, n2, options);
  } catch (const ResourceLimitError& e) {
    r.verdict = Verdict::skipped;
    r.reason = e.what();
    r.wall_time_ms = clock.elapsed_ms();
    return r;
  }
  const auto base = monster2({{n1, n2}, {{}, {}}}, options.cap_letters);
  const auto predicted = predicted_complexity(n1, n2);
  const std::size_t pairs = (std::size_t{1} << n1) << n2;
  std::vector<ExperimentReport> rows(pairs);
  parallel_for(pairs, options.jobs, [&](std::size_t index) {
    Stopwatch row_clock;
    const auto f1 = mask_to_set(index >> n2, n1);
    const auto f2 = mask_to_set(index & ((std::size_t{1} << n2) - 1), n2);
    ExperimentReport& row = rows[index];
    row.command = "sweep-finals";
    row.parameters = {{"n1", n1}, {"n2", n2}, {"F1", f1}, {"F2", f2}};
    const auto measured = minimized_stx_size(with_finals(base.first, f1), with_finals(base.second, f2),
                                             options.cap_states);
    row.measured = measured;
    row.predicted = predicted;
    row.details = {{"tableau_bound", count_constrained(FinalZone(n1, n2, f1, f2))}};
    row.verdict = measured <= predicted ? Verdict::pass : Verdict::fail;
    row.wall_time_ms = row_clock.elapsed_ms();
  });

  std::uint64_t max = 0;
  for (const auto& row : rows) max = std::max(max, row.measured.get<std::uint64_t>());
  const std::size_t reference = (std::size_t{1} << (n1 - 1)) << n2 | 1;  // ({n1-1}, {0})
  const auto at_reference = rows[reference].measured.get<std::uint64_t>();
  auto argmax = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    if (row.measured.get<std::uint64_t>() == max) {
      argmax.push_back({{"F1", row.parameters["F1"]}, {"F2", row.parameters["F2"]}});
    }
  }
  r.measured = {{"max", max}, {"reference", at_reference}};
  r.predicted = predicted;
  r.details = {{"attained_at", argmax}};
  r.verdict = at_reference == max ? Verdict::pass : Verdict::fail;
  if (r.verdict == Verdict::fail) r.reason = "maximum not attained at ({n1-1},{0})";
  r.children = std::move(rows);
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

std::string sweep_csv(const ExperimentReport& sweep) {
  std::ostringstream out;
  out << "n1,n2,F1,F2,measured,predicted,verdict\n";
  for (const auto& row : sweep.children) {
    const auto& p = row.parameters;
    out << p["n1"].get<std::size_t>() << ',' << p["n2"].get<std::size_t>() << ','
        << set_text(p["F1"].get<std::vector<State>>()) << ','
        << set_text(p["F2"].get<std::vector<State>>()) << ',' << row.measured.dump() << ','
        << row.predicted.dump() << ',' << to_string(row.verdict) << '\n';
  }
  return out.str();
}

Figures build_figures() {
  auto example1 = monster1(2, {1});
  const auto letters = bracket_letters();
  auto figure1 = star_modifier(example1, {Materialize::all, 4});
  const std::vector<Letter> phi{letters.at("01"), letters.at("11")};
  auto figure2 = preimage_by_renaming(example1, phi, {"a", "b"});
  auto figure3 = star_modifier(figure2, {Materialize::all, 4});
  return {std::move(example1), std::move(figure1), std::move(figure2), std::move(figure3)};
}

ExperimentReport cmd_verify_figures() {
  Stopwatch clock;
  const auto figures = build_figures();
  const auto brackets = bracket_letters();
  const std::map<std::string, Letter> ab = {{"a", 0}, {"b", 1}};

  const Drawing example1{"example1",
                         {{"0", 0}, {"1", 1}},
                         brackets,
                         {{"0", {"01", "00"}, "0"},
                          {"0", {"11", "10"}, "1"},
                          {"1", {"01", "11"}, "1"},
                          {"1", {"00", "10"}, "0"}},
                         {"1"},
                         {"0"}};
  // The empty set is final by definition even though the drawing omits it.
  const Drawing figure1{"figure1",
                        kSubsetStates,
                        brackets,
                        {{"{}", {"01", "00"}, "{0}"},
                         {"{}", {"11", "10"}, "{0,1}"},
                         {"{0}", {"01", "00"}, "{0}"},
                         {"{0}", {"11", "10"}, "{0,1}"},
                         {"{1}", {"10", "00"}, "{0}"},
                         {"{1}", {"11", "01"}, "{0,1}"},
                         {"{0,1}", {"10", "01", "11"}, "{0,1}"},
                         {"{0,1}", {"00"}, "{0}"}},
                        {"{}", "{1}", "{0,1}"},
                        {"{0}"}};
  const Drawing figure2{"figure2",
                        {{"0", 0}, {"1", 1}},
                        ab,
                        {{"0", {"a"}, "0"}, {"0", {"b"}, "1"}, {"1", {"a", "b"}, "1"}},
                        {"1"},
                        {"0"}};
  const Drawing figure3{"figure3",
                        kSubsetStates,
                        ab,
                        {{"{}", {"a"}, "{0}"},
                         {"{}", {"b"}, "{0,1}"},
                         {"{0}", {"a"}, "{0}"},
                         {"{0}", {"b"}, "{0,1}"},
                         {"{1}", {"a", "b"}, "{0,1}"},
                         {"{0,1}", {"a", "b"}, "{0,1}"}},
                        {"{}", "{1}", "{0,1}"},
                        {"{0}"}};

  ExperimentReport r;
  r.command = "verify-figures";
  r.children.push_back(check_drawing(figures.example1, example1));
  r.children.push_back(check_drawing(figures.figure1.dfa, figure1));
  r.children.push_back(check_drawing(figures.figure2, figure2));
  r.children.push_back(check_drawing(figures.figure3.dfa, figure3));
  std::size_t matched = 0, checked = 0;
  for (const auto& c : r.children) {
    matched += c.measured.get<std::size_t>();
    checked += c.predicted.get<std::size_t>();
  }
  r.measured = matched;
  r.predicted = checked;
  r.verdict = r.any_failure() ? Verdict::fail : Verdict::pass;
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

std::string render_export(const ExportRequest& req, const ExperimentOptions& options) {
  const auto& what = req.what;
  const auto& format = req.format;
  auto unsupported = [&]() {
    return std::invalid_argument("export: format '" + format + "' is not available for '" + what + "'");
  };
  auto single = [&](const Dfa& a, std::span<const std::string> state_labels) -> std::string {
    if (format == "dot") return export_dot(a, state_labels, what);
    if (format == "json") return export_json(a, 2) + "\n";
    throw unsupported();
  };

  if (what == "example1" || what == "figure1" || what == "figure2" || what == "figure3") {
    const auto figures = build_figures();
    if (what == "example1") return single(figures.example1, {});
    if (what == "figure2") return single(figures.figure2, {});
    const auto& m = what == "figure1" ? figures.figure1 : figures.figure3;
    const StarModifier labeller(StateConfig::of(what == "figure1" ? figures.example1 : figures.figure2));
    return single(m.dfa, m.state_labels(labeller));
  }
  if (what == "monster" || what == "witness") {
    const auto pair = what == "witness"
                          ? witness_pair(req.n1, req.n2)
                          : monster2({{req.n1, req.n2}, {{static_cast<State>(req.n1 - 1)}, {0}}},
                                     options.cap_letters);
    if (format == "json") return pair_json(pair);
    if (format == "dot") return pair_dot(pair);
    throw unsupported();
  }
  if (what == "stx-witness") {
    const auto pair = witness_pair(req.n1, req.n2);
    return single(minimize(stx(pair.first, pair.second, {Materialize::accessible, options.cap_states}).dfa),
                  {});
  }
  if (what == "alpha") {
    if (format != "csv") throw unsupported();
    return counts_csv(req.max_size);
  }
  if (what == "sweep") {
    const auto report = cmd_sweep_finals(req.n1, req.n2, options);
    if (format == "csv") return sweep_csv(report);
    if (format == "json") {
      auto j = report.to_json();
      drop_timings(j);
      return j.dump(2) + "\n";
    }
    throw unsupported();
  }
  throw std::invalid_argument("export: unknown target '" + what + "'");
}

ExperimentReport cmd_export(const ExportRequest& request, const std::filesystem::path& out,
                            const ExperimentOptions& options) {
  Stopwatch clock;
  ExperimentReport r;
  r.command = "export";
  r.parameters = {{"what", request.what}, {"format", request.format}, {"out", out.string()}};
  const auto content = render_export(request, options);
  if (out == "-") {
    std::cout << content;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("export: cannot open " + out.string() + " for writing");
    file << content;
    if (!file) throw std::runtime_error("export: write to " + out.string() + " failed");
  }
  r.measured = content.size();
  r.verdict = Verdict::pass;
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

}  // namespace starxor
