#include "fracinv/frac/fam.hpp"

#include "fracinv/frac/gamma.hpp"
#include "fracinv/par/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace fracinv::frac {

namespace {

bool finite2(const std::array<double, 2>& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]);
}

constexpr double kBlowup = 1e12;

} // namespace

Trajectory fam_solve(const RHS2& f, std::array<double, 2> x0, double alpha, double t_end,
                     int n_steps, bool parallel) {
  if (!(alpha > 0) || alpha > 1) throw std::domain_error("fam_solve: alpha must be in (0,1]");
  if (n_steps < 1) throw std::domain_error("fam_solve: need at least one step");
  if (!(t_end > 0)) throw std::domain_error("fam_solve: t_end must be positive");

  const double h = t_end / n_steps;
  const double ha1 = std::pow(h, alpha) / gamma_fn(alpha + 1);
  const double ha2 = std::pow(h, alpha) / gamma_fn(alpha + 2);
  const int n_max = n_steps;

  // p0[k] = k^alpha, p1[k] = k^(alpha+1)
  std::vector<double> p0(n_max + 2), p1(n_max + 2);
  for (int k = 0; k <= n_max + 1; ++k) {
    p0[k] = std::pow(static_cast<double>(k), alpha);
    p1[k] = std::pow(static_cast<double>(k), alpha + 1);
  }
  std::vector<double> b(n_max + 1), A(n_max);
  for (int k = 0; k <= n_max; ++k) b[k] = p0[k + 1] - p0[k];
  for (int d = 0; d < n_max; ++d) A[d] = p1[d + 2] + p1[d] - 2 * p1[d + 1];

  Trajectory tr;
  tr.t.reserve(n_max + 1);
  tr.x.reserve(n_max + 1);
  tr.t.push_back(0);
  tr.x.push_back(x0);

  std::vector<double> fx, fy;     // f history per component
  std::vector<double> wp, wc;     // per-step reversed weights
  fx.reserve(n_max + 1);
  fy.reserve(n_max + 1);
  wp.resize(n_max + 1);
  wc.resize(n_max + 1);

  auto dot = parallel ? par::dot_parallel : par::dot_chunked;

  std::array<double, 2> fcur = f(0.0, x0);
  if (!finite2(fcur)) {
    tr.blew_up = true;
    tr.blowup_time = 0;
    return tr;
  }
  fx.push_back(fcur[0]);
  fy.push_back(fcur[1]);

  for (int n = 0; n < n_max; ++n) {
    const double tn1 = (n + 1) * h;

    for (int j = 0; j <= n; ++j) wp[j] = b[n - j];
    double px = x0[0] + ha1 * dot(wp.data(), fx.data(), n + 1);
    double py = x0[1] + ha1 * dot(wp.data(), fy.data(), n + 1);

    std::array<double, 2> fp{0, 0};
    bool pred_ok = std::isfinite(px) && std::isfinite(py);
    if (pred_ok) {
      fp = f(tn1, {px, py});
      pred_ok = finite2(fp);
    }
    if (!pred_ok) {
      tr.blew_up = true;
      tr.blowup_time = tn1;
      return tr;
    }

    wc[0] = p1[n] - (n - alpha) * p0[n + 1]; // weight of f at t = 0
    for (int j = 1; j <= n; ++j) wc[j] = A[n - j];
    double cx = x0[0] + ha2 * (dot(wc.data(), fx.data(), n + 1) + fp[0]);
    double cy = x0[1] + ha2 * (dot(wc.data(), fy.data(), n + 1) + fp[1]);

    std::array<double, 2> xn{cx, cy};
    if (!finite2(xn) || std::abs(cx) > kBlowup || std::abs(cy) > kBlowup) {
      tr.blew_up = true;
      tr.blowup_time = tn1;
      return tr;
    }
    fcur = f(tn1, xn);
    if (!finite2(fcur)) {
      tr.blew_up = true;
      tr.blowup_time = tn1;
      return tr;
    }
    tr.t.push_back(tn1);
    tr.x.push_back(xn);
    fx.push_back(fcur[0]);
    fy.push_back(fcur[1]);
  }
  return tr;
}

Trajectory rk4_solve(const RHS2& f, std::array<double, 2> x0, double t_end, int n_steps) {
  if (n_steps < 1) throw std::domain_error("rk4_solve: need at least one step");
  const double h = t_end / n_steps;
  Trajectory tr;
  tr.t.push_back(0);
  tr.x.push_back(x0);
  std::array<double, 2> x = x0;
  for (int n = 0; n < n_steps; ++n) {
    double t = n * h;
    auto k1 = f(t, x);
    auto k2 = f(t + h / 2, {x[0] + h / 2 * k1[0], x[1] + h / 2 * k1[1]});
    auto k3 = f(t + h / 2, {x[0] + h / 2 * k2[0], x[1] + h / 2 * k2[1]});
    auto k4 = f(t + h, {x[0] + h * k3[0], x[1] + h * k3[1]});
    x = {x[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
         x[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
    if (!finite2(x) || std::abs(x[0]) > kBlowup || std::abs(x[1]) > kBlowup) {
      tr.blew_up = true;
      tr.blowup_time = t + h;
      return tr;
    }
    tr.t.push_back(t + h);
    tr.x.push_back(x);
  }
  return tr;
}

} // namespace fracinv::frac
