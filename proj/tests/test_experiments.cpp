#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starxor/experiments.hpp"
#include "starxor/tableaux.hpp"
#include "starxor/witness.hpp"

using namespace starxor;

namespace {

std::size_t count_lines(const std::string& s) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

// Index of the state whose key is `key`.
State by_key(const ModifiedDfa& m, std::uint64_t key) {
  for (State q = 0; q < m.keys.size(); ++q)
    if (m.keys[q] == key) return q;
  FAIL("no state with key " << key);
  return 0;
}

}  // namespace

TEST_CASE("method names") {
  CHECK(parse_method("full-monster") == ScMethod::full_monster);
  CHECK(to_string(ScMethod::witness) == "witness");
  CHECK_THROWS_AS(parse_method("guess"), std::invalid_argument);
}

TEST_CASE("sc by formula") {
  auto r = cmd_sc(2, 2, ScMethod::formula);
  CHECK(r.measured == 9);
  CHECK(r.predicted == 9);
  CHECK(r.verdict == Verdict::pass);
  auto j = r.to_json();
  CHECK(j["n1"] == 2);
  CHECK(j["method"] == "formula");
  CHECK(j["equal"] == true);
  CHECK(j.contains("wall_time_ms"));

  // beyond the enumeration limit the formula is reported on its own
  CHECK(measure_formula(6, 6).measured == predicted_complexity(6, 6));
}

TEST_CASE("sc by brute force reports the off-by-one honestly") {
  auto r = cmd_sc(2, 3, ScMethod::full_monster);
  CHECK(r.measured == 20);
  CHECK(r.predicted == 21);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.any_failure());
}

TEST_CASE("all mode demands exact agreement") {
  auto r = cmd_sc(2, 2, ScMethod::all);
  REQUIRE(r.children.size() == 3);
  CHECK(r.measured["formula"] == 9);
  CHECK(r.measured["full-monster"] == 8);
  CHECK(r.measured["witness"] == 8);
  CHECK(r.verdict == Verdict::fail);
}

TEST_CASE("caps turn into skipped verdicts") {
  auto r = cmd_sc(5, 5, ScMethod::full_monster);
  CHECK(r.verdict == Verdict::skipped);
  CHECK(r.measured.is_null());
  CHECK_FALSE(r.any_failure());

  ExperimentOptions tight;
  tight.cap_transitions = 1000;
  CHECK(cmd_sc(3, 3, ScMethod::full_monster, tight).verdict == Verdict::skipped);

  tight = {};
  tight.cap_states = 10;
  CHECK(cmd_sc(3, 3, ScMethod::witness, tight).verdict == Verdict::skipped);
}

TEST_CASE("final-set sweep at (2, 2)") {
  ExperimentOptions opts;
  opts.jobs = 3;
  auto r = cmd_sweep_finals(2, 2, opts);
  REQUIRE(r.children.size() == 16);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.measured["max"] == 8);
  CHECK(r.measured["reference"] == 8);
  for (const auto& c : r.children) {
    CHECK(c.measured.get<int>() <= 8);
    // one component empty: the tableau bound does not apply
    bool degenerate = c.parameters["F1"].empty() || c.parameters["F2"].empty();
    if (degenerate) CHECK(c.measured.get<int>() <= 8);
  }
  auto csv = sweep_csv(r);
  CHECK(csv.rfind("n1,n2,F1,F2,measured,predicted,verdict\n", 0) == 0);
  CHECK(count_lines(csv) == 17);
  CHECK(csv.find("2,2,{1},{0},8,9,pass") != std::string::npos);

  // the job count must not change the report
  opts.jobs = 1;
  CHECK(sweep_csv(cmd_sweep_finals(2, 2, opts)) == csv);
}

TEST_CASE("figures") {
  auto f = build_figures();
  CHECK(f.example1.letter_count() == 4);

  // {1} --[1 1],[0 1]--> {0,1}
  auto& s1 = f.figure1;
  CHECK(s1.dfa.next(by_key(s1, 0b10), 3) == by_key(s1, 0b11));
  CHECK(s1.dfa.next(by_key(s1, 0b10), 1) == by_key(s1, 0b11));

  // C: a = [0 1], b = [1 1]; state 1 loops on both
  CHECK(f.figure2.letter_labels() == std::vector<std::string>{"a", "b"});
  CHECK(f.figure2.next(1, 0) == 1);
  CHECK(f.figure2.next(1, 1) == 1);

  // {1} --a,b--> {0,1}
  auto& s3 = f.figure3;
  CHECK(s3.dfa.next(by_key(s3, 0b10), 0) == by_key(s3, 0b11));
  CHECK(s3.dfa.next(by_key(s3, 0b10), 1) == by_key(s3, 0b11));

  auto r = cmd_verify_figures();
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.children.size() == 4);
}

TEST_CASE("exports") {
  ExportRequest req{"figure1", "dot"};
  auto dot = render_export(req);
  std::size_t nodes = 0;
  for (std::size_t at = dot.find(" [shape="); at != std::string::npos;
       at = dot.find(" [shape=", at + 1))
    ++nodes;
  CHECK(nodes == 4 + 1);  // plus the invisible start marker
  CHECK(render_export(req) == dot);

  CHECK(count_lines(render_export({"alpha", "csv"})) == 26);

  auto json = nlohmann::json::parse(render_export({"witness", "json", 3, 3}));
  auto w = witness_pair(3, 3);
  CHECK(import_json(json["first"].dump()) == w.first);
  CHECK(import_json(json["second"].dump()) == w.second);

  CHECK(render_export({"sweep", "json", 2, 2}) == render_export({"sweep", "json", 2, 2}));
  CHECK_THROWS_AS(render_export({"alpha", "dot"}), std::invalid_argument);
  CHECK_THROWS_AS(render_export({"nothing", "dot"}), std::invalid_argument);

  auto path = std::filesystem::temp_directory_path() / "starxor_export_test.csv";
  auto r = cmd_export({"alpha", "csv"}, path);
  CHECK(r.verdict == Verdict::pass);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == counts_csv(4));
  std::filesystem::remove(path);

  CHECK_THROWS_WITH_AS(cmd_export({"alpha", "csv"}, "/nonexistent-dir/x.csv"),
                       doctest::Contains("/nonexistent-dir/x.csv"), std::runtime_error);
}
