#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sharkovsky/cobweb.hpp"
#include "sharkovsky/io.hpp"
#include "sharkovsky/kernel.hpp"
#include "sharkovsky/loop_builder.hpp"
#include "sharkovsky/orbit.hpp"
#include "sharkovsky/order.hpp"
#include "sharkovsky/verifier.hpp"

using namespace sharkovsky;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNumerical = 3;

ScanOptions scan_options() {
  ScanOptions opt;
  if (const char* tol = std::getenv("SHARKOVSKY_TOL")) {
    const double v = to_double(parse_rational(tol));
    require(v > 0, ErrorKind::kParse, "SHARKOVSKY_TOL must be positive");
    opt.root_tol = v;
  }
  return opt;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  require(out.good(), ErrorKind::kParse, "cannot write '" + out_path + "'");
  out << text;
}

json analyze(const CyclicPermutation& pi) {
  json j = to_json(pi);
  if (pi.size() >= 2) {
    j["i0"] = pivot(pi);
    const auto mu = transition_matrix(pi);
    json rows = json::array();
    for (Eigen::Index i = 0; i < mu.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index s = 0; s < mu.cols(); ++s) row.push_back(mu(i, s));
      rows.push_back(row);
    }
    j["transition_matrix"] = rows;
  }
  if (pi.size() > 2) {
    j["expansion_steps"] = expansion_steps(pi);
    const auto iterates = iterate_A(pi, Segment::unit(pivot(pi)), expansion_steps(pi));
    j["pivot_iterates"] = to_string(std::span<const Segment>(iterates));
    const auto a = is_class_A(pi);
    j["class_A"] = a.member;
    j["witnesses"] = a.witnesses;
  }
  return j;
}

template <typename Kernel>
int run_verify(const Kernel& f, const std::vector<typename Kernel::Scalar>& points, int cap,
               const std::string& format, const std::string& out) {
  const auto orbit = orbit_to_permutation(f, points);
  const auto report = verify_forcing(f, orbit, cap);
  emit(format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n", out);
  return report.all_forced_ok() ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharkovsky forcing: orderings, permutation loops, and periodic-point certificates"};
  app.require_subcommand(1);

  auto* order = app.add_subcommand("order", "Sharkovsky ordering queries");
  order->require_subcommand(1);
  std::uint64_t cmp_n = 0, cmp_m = 0;
  auto* compare = order->add_subcommand("compare", "Does N precede M?");
  compare->add_option("N", cmp_n)->required();
  compare->add_option("M", cmp_m)->required();
  std::uint64_t forced_n = 0, forced_cap = 0;
  auto* forced = order->add_subcommand("forced", "Periods forced by N, up to a cap");
  forced->add_option("N", forced_n)->required();
  forced->add_option("--cap", forced_cap)->required();

  auto* perm = app.add_subcommand("perm", "Cyclic permutation analysis");
  perm->require_subcommand(1);
  std::string perm_file, dot_out;
  int target = 0, loop_period = 0;
  auto* perm_analyze = perm->add_subcommand("analyze", "Pivot, transition matrix, class membership");
  perm_analyze->add_option("FILE", perm_file)->required();
  perm_analyze->add_option("--dot", dot_out, "Write the covering digraph in DOT format");
  auto* perm_chain = perm->add_subcommand("chain", "Chain of unit segments from the pivot to a target");
  perm_chain->add_option("FILE", perm_file)->required();
  perm_chain->add_option("--target", target)->required();
  auto* perm_loop = perm->add_subcommand("loop", "Covering loop realizing a forced period");
  perm_loop->add_option("FILE", perm_file)->required();
  perm_loop->add_option("--period", loop_period)->required();

  auto* map_cmd = app.add_subcommand("map", "Interval map queries");
  map_cmd->require_subcommand(1);
  std::string map_file;
  int cycle_period = 0;
  std::vector<double> domain;
  auto* find_cycles_cmd = map_cmd->add_subcommand("find-cycles", "Cycles of a given least period");
  find_cycles_cmd->add_option("FILE", map_file)->required();
  find_cycles_cmd->add_option("--period", cycle_period)->required();
  find_cycles_cmd->add_option("--domain", domain)->expected(2);

  std::string verify_map, verify_orbit, mode = "float", verify_out, format = "json";
  int cap = 0;
  auto* verify = app.add_subcommand("verify", "Certify every forced period up to a cap");
  verify->add_option("--map", verify_map)->required();
  verify->add_option("--orbit", verify_orbit, "Orbit JSON; defaults to the breakpoints of a pl map");
  verify->add_option("--cap", cap)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--out", verify_out);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* plot = app.add_subcommand("plot", "Documentation plots");
  plot->require_subcommand(1);
  std::string plot_file, plot_out;
  double start = 0;
  int iters = 0;
  auto* cobweb = plot->add_subcommand("cobweb", "Cobweb diagram as SVG");
  cobweb->add_option("FILE", plot_file)->required();
  cobweb->add_option("--start", start)->required();
  cobweb->add_option("--iters", iters)->required();
  cobweb->add_option("--out", plot_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (compare->parsed()) {
      std::cout << cmp_n << " ▷ " << cmp_m << ": " << (precedes(cmp_n, cmp_m) ? "true" : "false") << "\n";
    } else if (forced->parsed()) {
      json j{{"n", forced_n}, {"cap", forced_cap}, {"forced", forced_periods(forced_n, forced_cap)}};
      std::cout << j.dump() << "\n";
    } else if (perm_analyze->parsed()) {
      const auto pi = permutation_from_json(read_json_file(perm_file));
      std::cout << analyze(pi).dump(2) << "\n";
      if (!dot_out.empty()) emit(to_dot(transition_matrix(pi)), dot_out);
    } else if (perm_chain->parsed()) {
      const auto pi = permutation_from_json(read_json_file(perm_file));
      std::cout << to_json(chain_to(pi, target)).dump(2) << "\n";
    } else if (perm_loop->parsed()) {
      const auto pi = permutation_from_json(read_json_file(perm_file));
      std::cout << to_json(loop_for_period(pi, loop_period)).dump(2) << "\n";
    } else if (find_cycles_cmd->parsed()) {
      const auto spec = map_from_json(read_json_file(map_file));
      Interval<double> dom = domain.empty() ? spec.domain() : Interval<double>(domain[0], domain[1]);
      const FloatKernel f(spec.real(), scan_options());
      json orbits = json::array();
      for (const auto& o : find_cycles(f, dom, cycle_period)) orbits.push_back(to_json(o));
      std::cout << json{{"period", cycle_period}, {"orbits", orbits}}.dump(2) << "\n";
    } else if (verify->parsed()) {
      const auto spec = map_from_json(read_json_file(verify_map));
      const json orbit_json = verify_orbit.empty() ? json() : read_json_file(verify_orbit);
      require(!verify_orbit.empty() || spec.is_exact(), ErrorKind::kPrecondition,
              "--orbit is required unless the map is a pl model whose breakpoints form the cycle");
      if (mode == "exact") {
        const auto points = verify_orbit.empty() ? spec.exact().xs() : exact_points_from_json(orbit_json);
        return run_verify(ExactKernel(spec.exact()), points, cap, format, verify_out);
      }
      std::vector<double> points;
      if (verify_orbit.empty()) {
        for (const auto& x : spec.exact().xs()) points.push_back(to_double(x));
      } else {
        points = float_points_from_json(orbit_json);
      }
      return run_verify(FloatKernel(spec.real(), scan_options()), points, cap, format, verify_out);
    } else if (cobweb->parsed()) {
      const auto spec = map_from_json(read_json_file(plot_file));
      emit(cobweb_svg(spec.real(), start, iters), plot_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::kParse) return kExitParse;
    return e.is_numerical() ? kExitNumerical : kExitPrecondition;
  }
  return 0;
}
