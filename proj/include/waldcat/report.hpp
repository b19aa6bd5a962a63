#pragma once

#include <string>
#include <vector>

namespace waldcat {

// A single counterexample or rule violation found by a checker.
struct Violation {
  std::string axiom;    // e.g. "W2", "kE4", "assoc"
  std::string detail;   // human-readable witness description
};

// Outcome of an exhaustive check. `ok` iff no violations were recorded.
// Checkers cap the number of stored witnesses (10 per axiom) but keep
// counting, so `checked` reflects the full enumeration.
struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;
  uint64_t checked = 0;

  static constexpr int kMaxPerAxiom = 10;

  void add(const std::string& axiom, const std::string& detail) {
    ok = false;
    int same = 0;
    for (const auto& v : violations)
      if (v.axiom == axiom) ++same;
    if (same < kMaxPerAxiom) violations.push_back({axiom, detail});
  }

  std::string summary() const {
    if (ok) return "ok";
    std::string s = "FAIL:";
    for (const auto& v : violations) s += " [" + v.axiom + "] " + v.detail + ";";
    return s;
  }
};

}  // namespace waldcat
