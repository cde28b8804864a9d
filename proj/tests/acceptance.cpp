// One PASS/FAIL line per acceptance criterion, from full runs in both axiom modes.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fubinilab/suite.hpp"

using namespace fubinilab;

namespace {

std::size_t two_point_structures(Axioms axioms) {
  std::size_t n = 0;
  for (const auto& s : enumerate_spaces(2, axioms)) n += s.size() == 2;
  return n;
}

bool green(const SuiteReport& r, const std::string& suite) {
  auto it = r.tallies.find(suite);
  return it != r.tallies.end() && it->second.failed == 0 && it->second.passed > 0;
}

std::string tally(const SuiteReport& r, const std::string& suite) {
  auto it = r.tallies.find(suite);
  if (it == r.tallies.end()) return "missing";
  return std::to_string(it->second.passed) + "/" + std::to_string(it->second.passed + it->second.failed);
}

// Every pair whose three cotensors are reflexive has equal composites.
bool main_implication(const SuiteReport& r, std::size_t& hypotheses) {
  bool ok = true;
  for (const auto& i : r.instances) {
    if (i.suite != "fubini") continue;
    if (!i.detail.contains("reflexive")) return false;
    const auto& rf = i.detail["reflexive"];
    if (rf["X"].get<bool>() && rf["Y"].get<bool>() && rf["XY"].get<bool>()) {
      ++hypotheses;
      ok = ok && i.detail["equal"].get<bool>();
    }
  }
  return ok && hypotheses > 0;
}

}  // namespace

int main() {
  SuiteConfig limit;
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport a = run_suite(limit);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  SuiteConfig down = limit;
  down.axioms = Axioms::down_only;
  const SuiteReport b = run_suite(down);

  int failures = 0;
  auto line = [&](int n, bool ok, const std::string& what) {
    std::printf("criterion %2d %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    failures += !ok;
  };
  auto both = [&](const std::string& s) { return green(a, s) && green(b, s); };
  auto counts = [&](const std::string& s) { return s + " limit " + tally(a, s) + ", down-only " + tally(b, s); };

  const std::size_t nl = two_point_structures(Axioms::limit), nd = two_point_structures(Axioms::down_only);
  line(1, both("cartesian") && nl == 4 && nd == 9,
       counts("cartesian") + "; 2-point structures " + std::to_string(nl) + " and " + std::to_string(nd));
  line(2, both("free"), counts("free"));
  line(3, both("monoidal"), counts("monoidal"));
  line(4, both("laws"), counts("laws"));
  line(5, both("iterated"), counts("iterated"));
  line(6, both("retraction"), counts("retraction"));
  std::size_t ha = 0, hb = 0;
  const bool implication = main_implication(a, ha) && main_implication(b, hb);
  line(7, implication && both("fubini"),
       counts("fubini") + "; pairs meeting the hypotheses " + std::to_string(ha) + " and " + std::to_string(hb));
  line(8, both("chain"), counts("chain"));
  line(9, both("kock"), counts("kock"));
  std::size_t rational = 0;
  for (const auto& i : a.instances) rational += i.suite == "oracle" && i.instance.rfind("rational#", 0) == 0 && i.ok;
  line(10, both("oracle") && rational >= 100 && a.ok() && secs < 300.0,
       counts("oracle") + "; rational instances " + std::to_string(rational) + "; default run " +
           std::to_string(secs) + " s");
  return failures == 0 ? 0 : 1;
}
