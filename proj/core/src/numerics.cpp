// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

namespace fermipar::numerics {
namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]. Positive abscissae in descending
// order; odd indices are the embedded Gauss-7 nodes, index 7 is the center.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss-7 weights, paired with kNodes[1], kNodes[3], kNodes[5], kNodes[7].
constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

// Worst error first; ties broken by position so refinement order is total.
struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

double checked_eval(const std::function<double(double)>& f, double x) {
  const double fx = f(x);
  if (!std::isfinite(fx)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "integrate_semi_infinite: integrand returned a non-finite "
                  "value at q = %.17g",
                  x);
    throw QuadratureError(buf);
  }
  return fx;
}

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k15 = 0.0;
  double g7 = 0.0;
  double resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kNodes[i];
    const double f1 = checked_eval(f, c - dx);
    const double f2 = checked_eval(f, c + dx);
    k15 += kKronrodW[i] * (f1 + f2);
    resabs += kKronrodW[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g7 += kGaussW[i / 2] * (f1 + f2);
  }
  const double fc = checked_eval(f, c);
  k15 += kKronrodW[7] * fc;
  g7 += kGaussW[3] * fc;
  resabs += kKronrodW[7] * std::abs(fc);

  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * k15;
  // Error floor at the round-off level of the panel sum: below that the
  // Kronrod-Gauss difference is noise and must not drive refinement.
  p.error = std::max(h * std::abs(k15 - g7),
                     10.0 * std::numeric_limits<double>::epsilon() * h * resabs);
  return p;
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double abs_tol, std::int64_t budget) {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::invalid_argument(
        "integrate_semi_infinite: abs_tol must be positive and finite");
  }
  if (budget < 15) {
    throw std::invalid_argument(
        "integrate_semi_infinite: budget must cover at least one panel "
        "(15 evaluations)");
  }

  constexpr double kPanelWidth = 10.0;
  constexpr double kDomainCap = 800.0;
  const double tail_cut = abs_tol / 16.0;

  QuadratureResult res;
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
  std::vector<Panel> done;
  double err_sum = 0.0;
  bool truncated = false;  // ran out of budget before the tail was covered

  // Outward extension: fixed-width panels until two consecutive ones are
  // negligible, so a hump beyond a single quiet panel is not missed.
  double edge = 0.0;
  double last_abs = std::numeric_limits<double>::infinity();
  while (edge < kDomainCap) {
    if (res.evaluations + 15 > budget) {
      truncated = true;
      break;
    }
    Panel p = evaluate_panel(f, edge, edge + kPanelWidth);
    res.evaluations += 15;
    err_sum += p.error;
    active.push(p);
    edge += kPanelWidth;
    const double cur_abs = std::abs(p.value);
    if (cur_abs < tail_cut && last_abs < tail_cut) break;
    last_abs = cur_abs;
  }

  // Worst-first bisection until the summed error estimate meets abs_tol.
  bool budget_out = truncated;
  while (!budget_out && err_sum > abs_tol && !active.empty()) {
    if (res.evaluations + 30 > budget) {
      budget_out = true;
      break;
    }
    Panel worst = active.top();
    active.pop();
    const double width = worst.b - worst.a;
    if (width < 1e-12 * (1.0 + std::abs(worst.a))) {
      done.push_back(worst);  // unsplittable; its error stays in the sum
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    res.evaluations += 30;
    err_sum += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }

  // Final accumulation in extended precision; the incremental err_sum is
  // only the refinement driver.
  long double value = 0.0L;
  long double error = 0.0L;
  while (!active.empty()) {
    done.push_back(active.top());
    active.pop();
  }
  for (const Panel& p : done) {
    value += p.value;
    error += p.error;
  }
  res.value = static_cast<double>(value);
  res.abs_error_estimate = static_cast<double>(error);
  res.converged = !truncated && res.abs_error_estimate <= abs_tol;
  return res;
}

double fermi_moment(int k) {
  switch (k) {
    case 2:
      return 1.5 * kZeta3;  // (1 - 2^-2) * 2!
    case 3:
      return 5.25 * kZeta4;  // (1 - 2^-3) * 3!
    case 4:
      return 22.5 * kZeta5;  // (1 - 2^-4) * 4!
    default:
      throw std::invalid_argument("fermi_moment: k must be 2, 3, or 4");
  }
}

MomentTable MomentTable::make() {
  MomentTable t;
  t.moment_k = {{2, fermi_moment(2)}, {3, fermi_moment(3)}, {4, fermi_moment(4)}};
  return t;
}

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
  GaussLegendreRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      deriv = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

}  // namespace fermipar::numerics
