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

#include "bosonq/golden.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "bosonq/encodings.hpp"

#ifndef BOSONQ_GOLDEN_DIR
#define BOSONQ_GOLDEN_DIR "data/golden"
#endif

namespace bosonq {

namespace {

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := ('+' | '-') factor | number | 'sqrt' '(' expr ')' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(fmt::format("expression '{}': {} at offset {}", s_, what, pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        const double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (eat('+')) return factor();
    if (eat('-')) return -factor();
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip_space();
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      const double v = expr();
      if (!eat(')')) fail("expected ')'");
      if (v < 0.0) fail("sqrt of a negative value");
      return std::sqrt(v);
    }
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

PauliSum atom_from_token(const std::string& tok) {
  if (tok == "I+") return single_qubit_atom(Atom::i_plus);
  if (tok == "I-") return single_qubit_atom(Atom::i_minus);
  if (tok == "s+") return single_qubit_atom(Atom::sigma_plus);
  if (tok == "s-") return single_qubit_atom(Atom::sigma_minus);
  if (tok == "I") return single_qubit_atom(Atom::identity);
  if (tok == "X") return single_qubit_atom(Atom::x);
  if (tok == "Y") return single_qubit_atom(Atom::y);
  if (tok == "Z") return single_qubit_atom(Atom::z);
  throw std::invalid_argument(fmt::format("unknown atom '{}'", tok));
}

PauliSum weighted(const GoldenComponent& c) {
  return Complex{std::sqrt(static_cast<double>(c.index)), 0.0} * c.op;
}

}  // namespace

double evaluate_expression(std::string_view expr) { return ExprParser(expr).parse(); }

GoldenEntry parse_golden(std::string_view text, const std::string& source) {
  GoldenEntry e;
  e.source = source;
  bool have_form = false;
  std::vector<std::pair<Complex, std::string>> raw_terms;
  std::vector<int> term_lines;
  std::map<int, int> atom_lines;  // component or erratum index → line, keyed negative for errata

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  const auto fail = [&](const std::string& why) {
    throw std::runtime_error(fmt::format("{}:{}: {}", source, line_no, why));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);

    try {
      if (key == "name") {
        if (args.size() != 1) fail("name takes one word");
        e.name = args[0];
      } else if (key == "target") {
        if (args.size() != 2) fail("target takes a kind and t");
        e.target = args[0];
        if (e.target != "creation" && e.target != "number" && e.target != "number_squared" &&
            e.target != "squeeze") {
          fail(fmt::format("unknown target '{}'", e.target));
        }
        e.t = std::stoi(args[1]);
        if (e.t < 1 || e.t > kMaxBosonQubits) fail("target t out of range");
      } else if (key == "form") {
        if (args.size() != 1 || (args[0] != "pauli" && args[0] != "ladder")) {
          fail("form must be pauli or ladder");
        }
        e.form = args[0] == "pauli" ? GoldenEntry::Form::pauli : GoldenEntry::Form::ladder;
        have_form = true;
      } else if (key == "scale") {
        if (args.size() != 1) fail("scale takes one expression");
        e.scale = evaluate_expression(args[0]);
      } else if (key == "term") {
        if (args.size() != 3) fail("term takes re, im and letters");
        (void)PauliString::from_letters(args[2]);
        raw_terms.emplace_back(Complex{evaluate_expression(args[0]), evaluate_expression(args[1])},
                               args[2]);
        term_lines.push_back(line_no);
      } else if (key == "component" || key == "erratum") {
        if (args.size() < 2) fail(key + " takes an index and atoms");
        GoldenComponent c;
        c.index = std::stoi(args[0]);
        if (c.index < 1) fail("component index must be >= 1");
        c.atoms.assign(args.begin() + 1, args.end());
        c.op = atom_from_token(c.atoms[0]);
        for (std::size_t k = 1; k < c.atoms.size(); ++k) c.op = tensor(c.op, atom_from_token(c.atoms[k]));
        atom_lines[key == "component" ? c.index : -c.index] = line_no;
        if (key == "component") {
          e.components.push_back(std::move(c));
        } else {
          const int idx = c.index;
          if (!e.errata.emplace(idx, std::move(c)).second) fail("duplicate erratum");
        }
      } else {
        fail(fmt::format("unknown key '{}'", key));
      }
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    } catch (const std::out_of_range& ex) {
      fail(ex.what());
    }
  }

  line_no = 0;
  if (e.name.empty()) fail("missing name");
  if (e.target.empty()) fail("missing target");
  if (!have_form) fail("missing form");

  if (e.form == GoldenEntry::Form::pauli) {
    if (raw_terms.empty()) fail("no terms");
    for (std::size_t k = 0; k < raw_terms.size(); ++k) {
      const std::string& letters = raw_terms[k].second;
      line_no = term_lines[k];
      if (static_cast<int>(letters.size()) != e.t) fail(fmt::format("term {} is not {} letters", letters, e.t));
    }
    line_no = 0;
    e.printed = e.scale * PauliSum::from_terms(raw_terms);
  } else {
    if (e.components.empty()) fail("no components");
    e.printed = PauliSum(e.t);
    for (const auto& c : e.components) {
      line_no = atom_lines[c.index];
      if (c.op.n_qubits() != e.t) fail(fmt::format("component {} is not {} atoms", c.index, e.t));
      e.printed = e.printed + weighted(c);
    }
    for (const auto& [i, c] : e.errata) {
      line_no = atom_lines[-i];
      if (c.op.n_qubits() != e.t) fail(fmt::format("erratum {} is not {} atoms", i, e.t));
    }
    e.printed = e.scale * e.printed;
  }
  return e;
}

GoldenEntry load_golden(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error(fmt::format("cannot open golden file {}", path.string()));
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_golden(ss.str(), path.string());
}

std::vector<GoldenEntry> load_golden_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error(fmt::format("golden directory {} not found", dir.string()));
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".golden") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<GoldenEntry> out;
  out.reserve(files.size());
  for (const auto& p : files) out.push_back(load_golden(p));
  return out;
}

PauliSum golden_target(const GoldenEntry& entry) {
  if (entry.target == "creation") return binary_creation(entry.t).op;
  if (entry.target == "number") return binary_number(entry.t);
  if (entry.target == "number_squared") return number_squared(entry.t);
  if (entry.target == "squeeze") return squeeze_block(entry.t);
  throw std::invalid_argument(fmt::format("{}: unknown target '{}'", entry.source, entry.target));
}

GoldenCheck check_golden(const GoldenEntry& entry, double tol) {
  GoldenCheck r;
  r.name = entry.name;
  const PauliSum target = golden_target(entry);

  if (entry.form == GoldenEntry::Form::pauli) {
    r.max_deviation = max_coefficient_deviation(entry.printed, target);
    r.passed = r.max_deviation <= tol;
    if (!r.passed) r.notes.push_back(fmt::format("max coefficient deviation {:.3e}", r.max_deviation));
    return r;
  }

  if (entry.target != "creation") {
    r.notes.push_back("ladder form is only defined for creation targets");
    return r;
  }
  const BinaryCreation rec = binary_creation(entry.t);
  bool ok = true;
  if (entry.components.size() != rec.components.size()) {
    ok = false;
    r.notes.push_back(fmt::format("{} components printed, {} expected", entry.components.size(),
                                  rec.components.size()));
  }
  PauliSum corrected(entry.t);
  for (const auto& c : entry.components) {
    const auto it = std::find_if(rec.components.begin(), rec.components.end(),
                                 [&](const LadderComponent& l) { return l.index == c.index; });
    if (it == rec.components.end()) {
      ok = false;
      r.notes.push_back(fmt::format("component {} has no counterpart", c.index));
      continue;
    }
    const bool matches = max_coefficient_deviation(c.op, it->op) <= tol;
    const auto err = entry.errata.find(c.index);
    if (err == entry.errata.end()) {
      corrected = corrected + weighted(c);
      if (!matches) {
        ok = false;
        r.notes.push_back(fmt::format("component {} differs from the recurrence", c.index));
      }
    } else {
      corrected = corrected + weighted(err->second);
      if (matches) {
        ok = false;
        r.notes.push_back(fmt::format("erratum {} recorded but printed component already matches", c.index));
      } else if (max_coefficient_deviation(err->second.op, it->op) > tol) {
        ok = false;
        r.notes.push_back(fmt::format("erratum {} does not match the recurrence either", c.index));
      } else {
        r.notes.push_back(fmt::format("component {}: printed form is a misprint, erratum applied", c.index));
      }
    }
  }
  for (const auto& [i, c] : entry.errata) {
    const bool printed = std::any_of(entry.components.begin(), entry.components.end(),
                                     [&](const GoldenComponent& g) { return g.index == i; });
    if (!printed) {
      ok = false;
      r.notes.push_back(fmt::format("erratum {} refers to no printed component", i));
    }
  }
  r.max_deviation = max_coefficient_deviation(entry.scale * corrected, target);
  if (r.max_deviation > tol) {
    ok = false;
    r.notes.push_back(fmt::format("summed operator deviates by {:.3e}", r.max_deviation));
  }
  r.passed = ok;
  return r;
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("BOSONQ_GOLDEN_DIR"); env && *env) return env;
  return BOSONQ_GOLDEN_DIR;
}

}  // namespace bosonq
