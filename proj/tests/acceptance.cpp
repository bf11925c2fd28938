// One line per criterion: "[PASS] N name (t s)" or "[FAIL] N name (t s): detail".
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sharkovsky/io.hpp"
#include "sharkovsky/kernel.hpp"
#include "sharkovsky/order.hpp"
#include "sharkovsky/verifier.hpp"
#include "support.hpp"

using namespace sharkovsky;
using testing_support::kFixtures;
using testing_support::kGolden;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Orbit<Rational> model_orbit(const ExactKernel& f) { return orbit_to_permutation(f, f.map().xs()); }

Outcome period_three_fixture(double& budget) {
  budget = 5;
  Outcome o;
  const fs::path tmp = fs::temp_directory_path() / "sharkovsky_acceptance_1.json";
  int code = run_cli("map find-cycles " + kFixtures + "/quadratic.json --period 3", tmp);
  o.check(code == 0, "find-cycles exit code " + std::to_string(code));
  if (code == 0) {
    const auto cycles = json::parse(slurp(tmp));
    bool found = false;
    for (const auto& orbit : cycles["orbits"]) {
      const auto pts = float_points_from_json(orbit);
      if (pts.size() != 3) continue;
      bool match = true;
      for (int i = 0; i < 3; ++i) match = match && std::abs(pts[static_cast<std::size_t>(i)] - (i + 1)) <= 1e-9;
      found = found || match;
    }
    o.check(found, "orbit {1, 2, 3} not found within 1e-9");
  }

  code = run_cli("verify --map " + kFixtures + "/quadratic.json --orbit " + kFixtures +
                     "/quadratic_orbit.json --cap 10 --mode float",
                 tmp);
  o.check(code == 0, "verify exit code " + std::to_string(code));
  if (code == 0) {
    const auto report = json::parse(slurp(tmp));
    o.check(report["entries"].size() == 10, "expected 10 entries");
    for (const auto& e : report["entries"]) {
      const int m = e["period"];
      const std::string status = e["status"];
      o.check(status == "ok" || (m == 3 && status == "given"), "period " + std::to_string(m) + ": " + status);
      o.check(e.value("least_period", 0) == m, "period " + std::to_string(m) + ": wrong least period");
      o.check(e.contains("residual") && std::stod(e["residual"].get<std::string>()) <= 1e-9,
              "period " + std::to_string(m) + ": residual above 1e-9");
    }
  }
  fs::remove(tmp);
  return o;
}

Outcome logistic_fixture(double& budget) {
  budget = 5;
  Outcome o;
  const auto spec = map_from_json(read_json_file(kFixtures + "/logistic.json"));
  const FloatKernel f(spec.real());
  const auto cycles = find_cycles(f, spec.domain(), 3);
  o.check(cycles.size() == 1, std::to_string(cycles.size()) + " three-cycles found");
  if (!cycles.empty()) {
    const double beta1 = cycles.front().points.front();
    const double expected = 0.15992689;
    char buf[160];
    std::snprintf(buf, sizeof buf, "smallest point %.12f differs from %.8f by %.3g (tolerance 1e-6)", beta1, expected,
                  std::abs(beta1 - expected));
    o.check(std::abs(beta1 - expected) <= 1e-6, buf);
  }
  return o;
}

Outcome negative_control(double& budget) {
  budget = 5;
  Outcome o;
  const auto f = connect_the_dots(validate({4, 3, 1, 2}));
  std::map<int, std::vector<PeriodicSet>> by_period;
  for (int m = 1; m <= 8; ++m) {
    for (const auto& s : brute_force_periodic_points(f, m)) {
      if (s.least_period == m) by_period[m].push_back(s);
    }
  }
  auto points_of = [](const std::vector<PeriodicSet>& sets) {
    std::vector<Interval<Rational>> out;
    for (const auto& s : sets) out.push_back(s.points);
    return out;
  };
  auto pt = [](long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return Interval<Rational>(r, r);
  };
  const std::map<int, std::vector<Interval<Rational>>> expected{
      {1, {pt(7, 3)}},
      {2, {pt(3, 2), pt(7, 2)}},
      {4, {pt(1, 1), pt(2, 1), pt(3, 1), pt(4, 1)}},
  };
  for (int m = 1; m <= 8; ++m) {
    const auto got = by_period.count(m) ? points_of(by_period[m]) : std::vector<Interval<Rational>>{};
    const auto want = expected.count(m) ? expected.at(m) : std::vector<Interval<Rational>>{};
    if (got != want) {
      std::string text;
      for (const auto& iv : got) {
        std::ostringstream ss;
        ss << iv;
        text += (text.empty() ? "" : " ") + ss.str();
      }
      o.check(false, "least period " + std::to_string(m) + " has {" + text + "}");
    }
  }
  o.check(forced_periods(4, 8) == std::vector<std::uint64_t>{2, 1}, "forced_periods(4, 8) != [2, 1]");
  return o;
}

Outcome worked_example(double& budget) {
  budget = 5;
  Outcome o;
  const auto pi = validate({8, 4, 2, 7, 3, 5, 1, 6});
  auto chain = [](const std::vector<Segment>& steps) { return to_string(std::span<const Segment>(steps)); };
  std::string text;
  text += "pivot_i0: " + std::to_string(pivot(pi)) + "\n";
  text += "iterate_A |4,5|: " + chain(iterate_A(pi, Segment(4, 5), expansion_steps(pi))) + "\n";
  text += "expansion_steps: " + std::to_string(expansion_steps(pi)) + "\n";
  for (int target : {7, 5, 3}) text += "chain_to " + std::to_string(target) + ": " + chain(chain_to(pi, target).steps) + "\n";
  text += "select_closing_i1 below: " + std::to_string(select_closing_i1(pi, ClosingCase::kBelow).i1) + "\n";
  text += "select_closing_i1 above: " + std::to_string(select_closing_i1(pi, ClosingCase::kAbove).i1) + "\n";
  text += "is_class_A witnesses:";
  for (int w : is_class_A(pi).witnesses) text += " " + std::to_string(w);
  text += "\n";

  std::istringstream got(text), want(slurp(kGolden + "/pi8_replay.txt"));
  std::string g, w;
  int line = 0;
  while (std::getline(want, w)) {
    ++line;
    std::getline(got, g);
    o.check(g == w, "line " + std::to_string(line) + ": '" + g + "' != '" + w + "'");
  }
  o.check(line == 9, "golden file has " + std::to_string(line) + " lines");
  return o;
}

Outcome ordering_oracle(double& budget) {
  budget = 10;
  Outcome o;
  const auto order = order_restricted(150);
  std::vector<std::size_t> index(151);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  for (std::uint64_t a = 1; a <= 150; ++a) {
    for (std::uint64_t b = 1; b <= 150; ++b) {
      const bool p = precedes(a, b);
      o.check(p == (index[a] < index[b]), "disagreement at " + std::to_string(a) + ", " + std::to_string(b));
      if (a != b) o.check(p != precedes(b, a), "not a strict total order at " + std::to_string(a) + ", " + std::to_string(b));
      else o.check(!p, "reflexive at " + std::to_string(a));
    }
  }
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t b = 1; b <= 60; ++b) {
      if (!precedes(a, b)) continue;
      for (std::uint64_t c = 1; c <= 60; ++c) {
        if (precedes(b, c)) o.check(precedes(a, c), "transitivity fails at " + std::to_string(a) + ", " +
                                                       std::to_string(b) + ", " + std::to_string(c));
      }
    }
  }
  return o;
}

Outcome operator_laws(double& budget) {
  budget = 30;
  Outcome o;
  std::mt19937 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 10;
    const auto pi = testing_support::random_cycle(n, rng);
    const std::string tag = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
    for (int lo = 1; lo < n; ++lo) {
      for (int hi = lo + 1; hi <= n; ++hi) {
        const Segment s(lo, hi);
        const Segment a = apply_A(pi, s);
        const auto [na, nb] = testing_support::naive_A(pi.images(), lo, hi);
        o.check(a == Segment(na, nb), tag + ": A differs from its definition");
        o.check(a.card() >= s.card(), tag + ": A shrinks a segment");
        o.check(s.contains(a) == (s == Segment(1, n)), tag + ": invariant proper segment");
        for (int lo2 = lo; lo2 < hi; ++lo2) {
          for (int hi2 = lo2 + 1; hi2 <= hi; ++hi2) {
            o.check(a.contains(apply_A(pi, Segment(lo2, hi2))), tag + ": A not monotone");
          }
        }
      }
    }
    const int i0 = pivot(pi);
    o.check(pi(i0) > i0 && pi(i0 + 1) <= i0, tag + ": pivot law");
    o.check(apply_A(pi, Segment::unit(i0)).contains(Segment::unit(i0)), tag + ": pivot segment does not cover itself");
    const int k = expansion_steps(pi);
    o.check(k >= 1 && k <= n - 2, tag + ": expansion steps out of range");
  }
  return o;
}

Outcome odd_forcing(double& budget) {
  budget = 60;
  Outcome o;
  const auto spec = map_from_json(read_json_file(kFixtures + "/pl_pi9.json"));
  const ExactKernel f(spec.exact());
  const auto report = verify_forcing(f, model_orbit(f), 12);
  int cross_checked = 0;
  for (const auto& e : report.entries) {
    const std::string tag = "period " + std::to_string(e.period);
    if (e.period == 9) continue;
    if (!precedes(9, static_cast<std::uint64_t>(e.period))) {
      o.check(e.status == EntryStatus::kNotForced, tag + ": should not be forced");
      continue;
    }
    o.check(e.status == EntryStatus::kOk, tag + ": " + e.reason);
    if (e.status != EntryStatus::kOk) continue;
    o.check(e.residual == 0, tag + ": nonzero residual");
    o.check(exact_least_period(f.map(), *e.point, e.period) == e.period, tag + ": wrong least period");
    try {
      bool contained = false;
      for (const auto& s : brute_force_periodic_points(f.map(), e.period)) contained = contained || s.points.contains(*e.point);
      o.check(contained, tag + ": point missing from the oracle");
      ++cross_checked;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kBlowupCap) throw;
    }
  }
  o.check(cross_checked > 0, "no entry could be cross-checked");
  return o;
}

Outcome itinerary_soundness(double& budget) {
  budget = 60;
  Outcome o;
  std::mt19937 rng(8);
  int done = 0;
  while (done < 200) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto pi = testing_support::random_cycle(n, rng);
    const auto mu = transition_matrix(pi);
    const int length = 1 + done % 6;
    std::vector<int> walk{static_cast<int>(rng() % static_cast<unsigned>(n - 1))};
    bool stuck = false;
    for (int step = 1; step < length && !stuck; ++step) {
      std::vector<int> next;
      for (int s = 0; s < n - 1; ++s) {
        if (mu(walk.back(), s)) next.push_back(s);
      }
      stuck = next.empty();
      if (!stuck) walk.push_back(next[rng() % next.size()]);
    }
    if (stuck || !mu(walk.back(), walk.front())) continue;

    const ExactKernel f(connect_the_dots(pi));
    CoveringLoop<Rational> loop;
    for (int s : walk) loop.emplace_back(Rational(s + 1), Rational(s + 2));
    const auto cert = follow_loop(f, loop);
    Rational y = cert.gamma;
    for (int i = 0; i < length; ++i) {
      o.check(loop[static_cast<std::size_t>(i)].contains(y), "itinerary leaves I_" + std::to_string(i));
      y = f.eval(y);
    }
    o.check(y == cert.gamma, "f^n(gamma) != gamma");
    o.check(cert.residual == 0, "nonzero residual");
    ++done;
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(double&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "period-3 quadratic fixture", period_three_fixture},
      {2, "logistic three-cycle", logistic_fixture},
      {3, "negative control on the period-4 model", negative_control},
      {4, "worked example replay", worked_example},
      {5, "ordering oracle", ordering_oracle},
      {6, "segment operator laws", operator_laws},
      {7, "odd forcing end to end", odd_forcing},
      {8, "itinerary soundness", itinerary_soundness},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    double budget = 0;
    Outcome o;
    try {
      o = c.run(budget);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    o.check(secs < budget, "runtime " + std::string(timing) + " over budget");
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << timing << ")";
    if (!o.pass) std::cout << ": " << o.detail;
    std::cout << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
