// Copyright 2026 The bosonq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "bosonq/golden.hpp"
#include "bosonq/verify.hpp"
#include "support/oracle.hpp"

using namespace bosonq;
namespace o = bosonq::oracle;
namespace fs = std::filesystem;

namespace {

o::Mat atom_matrix(const std::string& a) {
  o::Mat m(2, 2);
  if (a == "I+") m << 1, 0, 0, 0;
  else if (a == "I-") m << 0, 0, 0, 1;
  else if (a == "s+") m = o::sigma_plus();
  else if (a == "s-") m = o::sigma_minus();
  else m = o::letter(a.at(0));
  return m;
}

o::Mat atoms_matrix(const std::vector<std::string>& atoms) {
  std::vector<o::Mat> f;
  for (const auto& a : atoms) f.push_back(atom_matrix(a));
  return o::kron_all(f);
}

std::string error_of(std::string_view text) {
  try {
    parse_golden(text, "bad.golden");
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "no error";
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("bosonq_golden_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

constexpr const char* kCreation2 =
    "name c2\n"
    "target creation 2\n"
    "form ladder\n"
    "component 1 I+ s-\n"
    "component 2 s- s+\n"
    "component 3 I- s-\n";

}  // namespace

TEST_CASE("coefficient expressions") {
  CHECK(evaluate_expression("1") == 1.0);
  CHECK(evaluate_expression("-1/8") == -0.125);
  CHECK(evaluate_expression("2*(3+4)") == 14.0);
  CHECK(evaluate_expression("sqrt(2)+sqrt(6)") == doctest::Approx(std::sqrt(2.0) + std::sqrt(6.0)));
  CHECK(evaluate_expression("2*sqrt(2+sqrt(3))") == doctest::Approx(std::sqrt(2.0) + std::sqrt(6.0)));
  CHECK(evaluate_expression(" 1 - 2 - 3 ") == -4.0);
  CHECK(evaluate_expression("12/3/2") == 2.0);
  CHECK_THROWS_AS(evaluate_expression("sqrt(2"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression("2+"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression("log(2)"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression(""), std::invalid_argument);
}

TEST_CASE("bundled tables agree with the encodings") {
  const std::vector<GoldenEntry> entries = load_golden_dir(default_golden_dir());
  CHECK(entries.size() >= 9);
  for (const GoldenEntry& e : entries) {
    INFO(e.name);
    const GoldenCheck c = check_golden(e);
    CHECK(c.passed);
    CHECK(c.max_deviation < 1e-12);
    const o::Mat want_creation = o::annihilation(e.t).adjoint();
    if (e.form == GoldenEntry::Form::ladder) {
      // Each component, or its erratum, is the single transition i-1 → i.
      for (const auto& comp : e.components) {
        const auto fix = e.errata.find(comp.index);
        const o::Mat m = atoms_matrix(fix == e.errata.end() ? comp.atoms : fix->second.atoms);
        o::Mat want = o::Mat::Zero(m.rows(), m.cols());
        want(comp.index, comp.index - 1) = 1.0;
        CHECK(o::max_abs(m - want) < 1e-15);
        CHECK(o::max_abs(to_dense(comp.op) - atoms_matrix(comp.atoms)) < 1e-15);
      }
    } else if (e.target == "creation") {
      CHECK(o::max_abs(to_dense(e.printed) - want_creation) < 1e-12);
    }
  }
}

TEST_CASE("recorded errata are the only printed mismatches") {
  const GoldenEntry e4 = load_golden(default_golden_dir() / "creation_4_ladder.golden");
  REQUIRE(e4.errata.size() == 1);
  CHECK(e4.errata.count(15) == 1);
  const GoldenCheck c4 = check_golden(e4);
  CHECK(c4.passed);
  CHECK_FALSE(c4.notes.empty());
  const GoldenEntry e5 = load_golden(default_golden_dir() / "creation_5_ladder.golden");
  CHECK(e5.errata.size() == 2);
  CHECK(check_golden(e5).passed);
}

TEST_CASE("malformed tables name the file and line") {
  CHECK(error_of("name x\ntarget creation 2\nform pauli\nterm abc 0 XX\n").starts_with("bad.golden:4:"));
  CHECK(error_of("name x\ntarget creation 2\nform pauli\nterm 1 0 XQ\n").starts_with("bad.golden:4:"));
  CHECK(error_of("name x\ntarget creation 2\nform pauli\nterm 1 0 XXX\n").starts_with("bad.golden:4:"));
  CHECK(error_of("name x\ntarget banana 2\n").starts_with("bad.golden:2:"));
  CHECK(error_of("name x\ntarget creation 2\nform ladder\ncomponent 1 I+ q-\n").starts_with("bad.golden:4:"));
  CHECK(error_of("name x\nbogus line\n").starts_with("bad.golden:2:"));
  CHECK(error_of("name x\nform pauli\n").starts_with("bad.golden:"));
  CHECK(error_of(kCreation2) == "no error");
}

TEST_CASE("checks catch wrong coefficients and stale errata") {
  CHECK(check_golden(parse_golden(kCreation2)).passed);

  std::string swapped = kCreation2;
  swapped.replace(swapped.find("component 2 s- s+"), 17, "component 2 s+ s-");
  CHECK_FALSE(check_golden(parse_golden(swapped)).passed);

  const GoldenEntry wrong = parse_golden(
      "name n\ntarget number 2\nform pauli\nscale 1/2\n"
      "term 3 0 II\nterm -2 0 ZI\nterm -1.0001 0 IZ\n");
  const GoldenCheck wc = check_golden(wrong);
  CHECK_FALSE(wc.passed);
  CHECK(wc.max_deviation == doctest::Approx(0.00005).epsilon(1e-6));
  const GoldenEntry right = parse_golden(
      "name n\ntarget number 2\nform pauli\nscale 1/2\n"
      "term 3 0 II\nterm -2 0 ZI\nterm -1 0 IZ\n");
  CHECK(check_golden(right).passed);

  // An erratum for a component that is already right is itself a failure.
  const GoldenEntry stale = parse_golden(std::string(kCreation2) + "erratum 3 I- s-\n");
  CHECK_FALSE(check_golden(stale).passed);
}

TEST_CASE("verification report over a directory") {
  TempDir dir;
  dir.write("good.golden", kCreation2);
  VerifyReport good = verify_golden(dir.path);
  CHECK(good.ok());
  CHECK(good.count(CheckStatus::pass) == 1);

  dir.write("broken.golden", "name b\ntarget creation 2\nform pauli\nterm 1 0 XX\n");
  const VerifyReport bad = verify_golden(dir.path);
  CHECK_FALSE(bad.ok());
  CHECK(bad.count(CheckStatus::fail) == 1);
  CHECK(format_report(bad).find("FAIL") != std::string::npos);

  dir.write("garbled.golden", "name g\ntarget creation\n");
  const VerifyReport garbled = verify_golden(dir.path);
  CHECK(garbled.count(CheckStatus::fail) == 2);

  const VerifyReport missing = verify_golden(dir.path / "absent");
  CHECK_FALSE(missing.ok());
}

TEST_CASE("independent checks pass") {
  CHECK(verify_recurrence(4).ok());
  CHECK(verify_unary(6).ok());
  CHECK(verify_hamiltonians(10, kDefaultSeed).ok());
  YukawaParams p;
  CHECK(verify_backends(p, {1.0, 34.75}, 30).ok());
}
