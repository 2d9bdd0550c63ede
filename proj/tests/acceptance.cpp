// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "suites.hpp"

namespace suites = autoconj::suites;
using suites::SuiteResult;

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<SuiteResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "coincidence of A, B, C with the unified form", [] { return suites::coincidence({3, 20, 50, 20240601}); }},
      {2, "rotation closed forms", [] { return suites::rotation_forms(); }},
      {3, "autoconjugacy on the grid", [] { return suites::autoconj(); }},
      {4, "representer law and monotone graphs", [] { return suites::graph(); }},
      {5, "-ln domains, witnesses and A numeric", [] { return suites::neglog_domains(); }},
      {6, "identity family", [] { return suites::idfam(); }},
      {7, "sum identity and shear consistency", [] { return suites::sum_identity(10, 7); }},
      {8, "symmetry characterization", [] { return suites::hoe(10, 11); }},
      {9, "diagonal truncations and energy demo", [] { return suites::truncation(1000000); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && r.pass();
    all = all && pass;
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " " << c.title << " ["
              << (error.empty() ? r.summary() : "exception: " + error) << "] " << secs << "s" << std::endl;
  }
  return all ? 0 : 1;
}
