#include "sharkovsky/scan.hpp"

#include <algorithm>
#include <cmath>

namespace sharkovsky {

namespace {

double zero_tol(const ScanOptions& opt, double x) { return opt.value_rel_tol * (1.0 + std::abs(x)); }

int sign(double v) { return (v > 0) - (v < 0); }

void merge_into(std::vector<Interval<double>>& out, Interval<double> iv, double gap) {
  if (!out.empty() && iv.lo <= out.back().hi + gap) {
    out.back().hi = std::max(out.back().hi, iv.hi);
    return;
  }
  out.push_back(iv);
}

}  // namespace

double bisect(const PartialFunction& g, double a, double b, const ScanOptions& opt) {
  auto ga = g(a);
  auto gb = g(b);
  if (!ga || !gb) return std::abs(ga.value_or(INFINITY)) <= std::abs(gb.value_or(INFINITY)) ? a : b;
  if (*ga == 0.0) return a;
  if (*gb == 0.0) return b;
  double best = std::abs(*ga) <= std::abs(*gb) ? a : b;
  double best_val = std::min(std::abs(*ga), std::abs(*gb));
  const int sa = sign(*ga);
  for (int it = 0; it < opt.max_bisections; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    auto gm = g(mid);
    if (!gm) break;
    if (std::abs(*gm) < best_val) {
      best = mid;
      best_val = std::abs(*gm);
    }
    if (*gm == 0.0) return mid;
    if (sign(*gm) == sa) a = mid;
    else b = mid;
    if (b - a <= opt.root_tol * std::max(1.0, std::abs(mid)) && best_val <= opt.residual_tol) break;
  }
  return best;
}

double golden_min_abs(const PartialFunction& g, double a, double b, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto h = [&](double x) {
    auto v = g(x);
    return v ? std::abs(*v) : INFINITY;
  };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double hc = h(c);
  double hd = h(d);
  for (int i = 0; i < iterations && b - a > 0; ++i) {
    if (hc < hd) {
      b = d;
      d = c;
      hd = hc;
      c = b - inv_phi * (b - a);
      hc = h(c);
    } else {
      a = c;
      c = d;
      hc = hd;
      d = a + inv_phi * (b - a);
      hd = h(d);
    }
  }
  return hc < hd ? c : d;
}

std::vector<Interval<double>> scan_zeros(const PartialFunction& g, double a, double b, int samples,
                                         const ScanOptions& opt) {
  std::vector<Interval<double>> found;
  if (a == b) {
    auto v = g(a);
    if (v && std::abs(*v) <= zero_tol(opt, a)) found.emplace_back(a, a);
    return found;
  }
  const int n = std::max(samples, 2);
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<std::optional<double>> gs(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = i == n ? b : a + (b - a) * i / n;
    gs[static_cast<std::size_t>(i)] = g(xs[static_cast<std::size_t>(i)]);
  }
  auto is_zero = [&](std::size_t i) { return gs[i] && std::abs(*gs[i]) <= zero_tol(opt, xs[i]); };
  auto nonzero = [&](std::size_t i) { return gs[i] && !is_zero(i); };

  std::vector<Interval<double>> raw;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (is_zero(i)) {
      std::size_t j = i;
      while (j + 1 < xs.size() && is_zero(j + 1)) ++j;
      raw.emplace_back(xs[i], xs[j]);
      i = j;
      continue;
    }
    if (i + 1 < xs.size() && nonzero(i) && nonzero(i + 1) && sign(*gs[i]) != sign(*gs[i + 1])) {
      const double r = bisect(g, xs[i], xs[i + 1], opt);
      raw.emplace_back(r, r);
    }
    // Tangential zero: |g| dips between two same-signed neighbours.
    if (i > 0 && i + 1 < xs.size() && nonzero(i - 1) && nonzero(i) && nonzero(i + 1) &&
        sign(*gs[i - 1]) == sign(*gs[i]) && sign(*gs[i]) == sign(*gs[i + 1]) &&
        std::abs(*gs[i]) < std::abs(*gs[i - 1]) && std::abs(*gs[i]) <= std::abs(*gs[i + 1])) {
      const double m = golden_min_abs(g, xs[i - 1], xs[i + 1]);
      auto gm = g(m);
      if (!gm) continue;
      if (sign(*gm) != sign(*gs[i])) {
        // The cell hides two transversal crossings.
        const double r1 = bisect(g, xs[i - 1], m, opt);
        const double r2 = bisect(g, m, xs[i + 1], opt);
        raw.emplace_back(r1, r1);
        raw.emplace_back(r2, r2);
      } else if (std::abs(*gm) <= zero_tol(opt, m)) {
        raw.emplace_back(m, m);
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& p, const auto& q) { return p.lo < q.lo; });
  const double gap = 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
  for (const auto& iv : raw) merge_into(found, iv, gap);
  return found;
}

}  // namespace sharkovsky
