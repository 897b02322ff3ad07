#include "mattis/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace mattis {

namespace {

void require_beta(double beta) {
  if (!(beta > 0) || std::isinf(beta)) throw invalid_input("beta must be finite and > 0");
}

double log_one_minus_exp(double x) {
  return x > 0.6931471805599453 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

// X^{-2} int_0^X u ln(1 - e^{-u}) du
double radial_primitive_scaled(double X) {
  if (X < 1) {
    static constexpr double b2k[] = {1.0 / 6,        -1.0 / 30,     1.0 / 42,           -1.0 / 30,
                                     5.0 / 66,       -691.0 / 2730, 7.0 / 6,            -3617.0 / 510,
                                     43867.0 / 798,  -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};
    double X2 = X * X;
    double acc = 0.5 * std::log(X) - 0.25 - X / 6;
    double fact = 1, pw = 1;
    for (int k = 1; k <= 12; ++k) {
      fact *= (2 * k - 1) * (2 * k);
      pw *= X2;
      acc += b2k[k - 1] / (2 * k * fact) * pw / (2 * k + 2);
    }
    return acc;
  }
  // -zeta(3) + X Li2(e^{-X}) + Li3(e^{-X})
  double acc = -1.2020569031595942854;
  for (int n = 1; n < 200; ++n) {
    double dn = n;
    double term = std::exp(-dn * X) * (X / (dn * dn) + 1 / (dn * dn * dn));
    acc += term;
    if (term < 1e-18) break;
  }
  return acc / (X * X);
}

// Discrete distribution on the integers lo .. lo + w.size() - 1.
struct Dist {
  std::int64_t lo = 0;
  std::vector<double> w;
};

Dist convolve(const Dist& a, const Dist& b) {
  Dist c;
  c.lo = a.lo + b.lo;
  c.w.assign(a.w.size() + b.w.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.w.size(); ++i)
    for (std::size_t j = 0; j < b.w.size(); ++j) c.w[i + j] += a.w[i] * b.w[j];
  double top = *std::max_element(c.w.begin(), c.w.end());
  std::size_t first = 0, last = c.w.size();
  while (first < last && c.w[first] < 1e-40 * top) ++first;
  while (last > first && c.w[last - 1] < 1e-40 * top) --last;
  Dist t;
  t.lo = c.lo + static_cast<std::int64_t>(first);
  t.w.assign(c.w.begin() + first, c.w.begin() + last);
  return t;
}

Dist power(Dist base, std::int64_t n) {
  Dist acc{0, {1.0}};
  while (n > 0) {
    if (n & 1) acc = convolve(acc, base);
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return acc;
}

}  // namespace

double boson_free_energy(const ModelParams& p, double beta, Exec exec) {
  require_valid(p);
  require_beta(beta);
  const std::int64_t c = p.n_cut();
  const DerivedConstants d = derived(p);
  auto row = [&](std::int64_t m) {
    double acc = 0;
    for (int s : {1, -1}) {
      for (std::int64_t n = -c; n <= c; ++n) {
        if (n == 0) continue;
        Momentum2 q = s > 0 ? Momentum2::boson(n, m, p) : Momentum2::boson(m, n, p);
        acc += log_one_minus_exp(beta * mode_data(q, p, d).omega[s > 0 ? 0 : 1]);
      }
    }
    return acc;
  };
  double inner = 0;
  if (exec == Exec::serial) {
    for (std::int64_t m = -c; m <= c; ++m) inner += row(m);
  } else {
#pragma omp parallel for schedule(static) reduction(+ : inner) num_threads(thread_count())
    for (std::int64_t m = -c; m <= c; ++m) inner += row(m);
  }
  // chi = 0 region: omega = v_F |p_s|, independent of p_{-s}; 2 branches x 2 signs x N rows.
  double tail = 0;
  for (std::int64_t n = c + 1;; ++n) {
    double term = log_one_minus_exp(beta * p.v_F * p.dp() * static_cast<double>(n));
    tail += term;
    if (std::abs(term) <= 1e-17 * std::abs(tail)) break;
  }
  tail *= 4.0 * static_cast<double>(p.l_over_a);
  return (inner + tail) / beta;
}

Eigen::Index zero_mode_index(int r, int s, std::int64_t x_site, const ModelParams& p) {
  require_sign(r, "r");
  require_sign(s, "s");
  if (x_site < 0 || x_site >= p.l_over_a) throw invalid_input("site index out of range");
  return static_cast<Eigen::Index>(((s > 0 ? 0 : 1) * p.l_over_a + x_site) * 2 + (r > 0 ? 0 : 1));
}

ThetaSumSpec zero_mode_quadratic_form(const ModelParams& p, double beta) {
  require_valid(p);
  require_beta(beta);
  const std::int64_t N = p.l_over_a;
  if (4 * N > 64) throw invalid_input("zero_mode_quadratic_form: M = 4 l_over_a must be <= 64");
  DerivedConstants d = derived(p);
  const double c = beta * p.v_F * pi / p.L();
  const double kappa = c / static_cast<double>(N);
  const double a1 = (1 + p.gamma1) * d.A;
  const double a2 = 1 - p.gamma1;
  const double g = p.gamma2 * p.gamma2 / (1 + p.gamma1);
  const Eigen::Index M = 4 * N;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(M, M);
  for (int s : {1, -1}) {
    for (std::int64_t x = 0; x < N; ++x) {
      Eigen::Index ip = zero_mode_index(1, s, x, p), im = zero_mode_index(-1, s, x, p);
      H(ip, ip) += 0.5 * c * (a1 + a2);
      H(im, im) += 0.5 * c * (a1 + a2);
      H(ip, im) += 0.5 * c * (a1 - a2);
      H(im, ip) += 0.5 * c * (a1 - a2);
    }
  }
  for (Eigen::Index i = 0; i < M; ++i) {
    for (Eigen::Index j = 0; j < M; ++j) {
      bool same = (i / (2 * N)) == (j / (2 * N));
      H(i, j) += same ? 0.5 * kappa * g : 0.5 * kappa * p.gamma2;
    }
  }
  return ThetaSumSpec(H);
}

ZeroModeSum zero_mode_partition(const ModelParams& p, double beta) {
  require_valid(p);
  require_beta(beta);
  DerivedConstants dc = derived(p);
  const std::int64_t N = p.l_over_a;
  const double c = beta * p.v_F * pi / p.L();
  const double kappa = c / static_cast<double>(N);
  const double a = 0.5 * c * (1 + p.gamma1) * dc.A;
  const double b = 0.5 * c * (1 - p.gamma1);
  const double g = p.gamma2 * p.gamma2 / (1 + p.gamma1);

  auto parity_sum = [](double coef, int parity) {
    std::int64_t dmax = static_cast<std::int64_t>(std::ceil(std::sqrt(80.0 / coef))) + 2;
    double acc = 0;
    for (std::int64_t d = dmax; d >= 1; --d)
      if ((d & 1) == parity) acc += 2 * std::exp(-coef * static_cast<double>(d * d));
    return parity == 0 ? acc + 1 : acc;
  };
  const double theta_even = parity_sum(b, 0);
  const double theta_odd = parity_sum(b, 1);

  const std::int64_t mmax = static_cast<std::int64_t>(std::ceil(std::sqrt(80.0 / a))) + 2;
  Dist site;
  site.lo = -mmax;
  double W = 0;
  for (std::int64_t m = -mmax; m <= mmax; ++m) {
    double w = std::exp(-a * static_cast<double>(m * m)) * ((m & 1) ? theta_odd : theta_even);
    site.w.push_back(w);
  }
  // sum from the smallest terms up
  std::vector<double> sorted = site.w;
  std::sort(sorted.begin(), sorted.end());
  for (double w : sorted) W += w;
  for (double& w : site.w) w /= W;
  const double J_site = 0.5 * pi / std::sqrt(a * b);

  Dist total = power(site, N);
  double C = 0;
  for (std::size_t i = 0; i < total.w.size(); ++i) {
    double n1 = static_cast<double>(total.lo + static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < total.w.size(); ++j) {
      double n2 = static_cast<double>(total.lo + static_cast<std::int64_t>(j));
      C += total.w[i] * total.w[j] *
           std::exp(-kappa * (0.5 * g * (n1 * n1 + n2 * n2) + p.gamma2 * n1 * n2));
    }
  }
  ZeroModeSum out;
  const double twoN = 2.0 * static_cast<double>(N);
  out.log_Z = twoN * std::log(W) + std::log(C);
  out.log_J = twoN * std::log(J_site) + 0.5 * std::log(dc.A);
  out.ratio_minus_one = std::expm1(twoN * std::log(W / J_site) + std::log(C) - 0.5 * std::log(dc.A));
  // Eigenvalues of the form: c (1+g1) A, c (1-g1) per site, c (1+g1 +- g2) on the total-charge modes.
  double top = c * std::max({(1 + p.gamma1) * dc.A, 1 - p.gamma1, 1 + p.gamma1 + std::abs(p.gamma2)});
  double lambda = 1.0 / top;
  if (lambda > 2.0 / (pi * pi)) {
    double l = lambda * pi * pi;
    double one = 2 * (std::exp(-l) + std::exp(-l) / -std::expm1(-3 * l));
    out.bound = std::expm1(4.0 * static_cast<double>(N) * std::log1p(one));
  } else {
    out.bound = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

double zero_mode_free_energy(const ModelParams& p, double beta, ZeroModeMode mode) {
  require_valid(p);
  require_beta(beta);
  DerivedConstants d = derived(p);
  switch (mode) {
    case ZeroModeMode::closed:
      return -(2 * p.L() / (p.a_tilde * beta)) * std::log(p.L() / (beta * d.v_tilde * std::sqrt(d.A))) -
             std::log(d.A) / (2 * beta);
    case ZeroModeMode::gaussian:
      return -zero_mode_partition(p, beta).log_J / beta;
    case ZeroModeMode::theta:
      return -zero_mode_partition(p, beta).log_Z / beta;
  }
  throw invalid_input("unknown zero-mode mode");
}

double qft_free_energy_density(const ModelParams& p, double beta) {
  require_valid(p);
  require_beta(beta);
  DerivedConstants d = derived(p);
  return -pi / (3 * d.v_tilde * std::sqrt(d.A) * beta * beta);
}

std::string to_string(ZeroModeMode m) {
  switch (m) {
    case ZeroModeMode::theta: return "theta-exact";
    case ZeroModeMode::gaussian: return "gaussian";
    case ZeroModeMode::closed: return "closed-form";
  }
  return "?";
}

FreeEnergyBreakdown free_energy(const ModelParams& p, double beta, ZeroModeMode mode, Exec exec) {
  FreeEnergyBreakdown f;
  f.omega_B = boson_free_energy(p, beta, exec);
  f.omega_Q = zero_mode_free_energy(p, beta, mode);
  f.E0 = ground_state_energy(p, exec);
  f.total = f.omega_B + f.omega_Q + f.E0;
  f.mode = mode;
  return f;
}

double dilog(double u) {
  if (u < 0 || u > 1) throw invalid_input("dilog: argument must be in [0, 1]");
  if (u == 1) return pi * pi / 6;
  if (u > 0.5) {
    double v = 1 - u;
    return pi * pi / 6 - std::log(u) * std::log(v) - dilog(v);
  }
  double term = u, acc = 0;
  for (int k = 1; k < 400; ++k) {
    double add = term / (static_cast<double>(k) * k);
    acc += add;
    if (add < 1e-18 * acc) break;
    term *= u;
  }
  return acc;
}

SplitResult free_energy_split(const ModelParams& p, double beta, double tol) {
  require_valid(p);
  require_beta(beta);
  using boost::math::quadrature::gauss_kronrod;
  DerivedConstants d = derived(p);
  const double a = p.a_tilde;
  // The radial integral is done in closed form; the angular one has a log endpoint
  // singularity at theta = 0 (g_- -> 0), which tanh-sinh handles.
  auto radial = [&](double theta) {
    double pmax = pi / (a * std::cos(theta));
    double acc = 0;
    for (int s : {1, -1}) {
      double k = beta * d.v_tilde * g_angular(s, theta, d.A);
      acc += pmax * pmax * radial_primitive_scaled(k * pmax);
    }
    return acc / beta;
  };
  double err_outer = 0, l1 = 0;
  boost::math::quadrature::tanh_sinh<double> ts;
  double wedge = ts.integrate(radial, 0.0, pi / 4, tol, &err_outer, &l1);
  if (err_outer > 1e3 * tol * std::max(1.0, std::abs(wedge)))
    throw non_convergence("free_energy_split: outer quadrature did not converge", err_outer);
  SplitResult r;
  const double pref = 8.0 / (4 * pi * pi);
  r.omega_less = pref * wedge;
  r.error_estimate = pref * err_outer;
  r.omega_greater = -(2.0 / (pi * a * beta * beta * p.v_F)) * dilog(std::exp(-beta * p.v_F * pi / a));
  double ve = d.v_tilde * std::sqrt(d.A);
  double X = beta * ve * pi / a;
  r.omega_less_effective = (2.0 / (pi * ve * a * beta * beta)) * (dilog(std::exp(-X)) - pi * pi / 6);
  return r;
}

double omega_greater_quadrature(const ModelParams& p, double beta) {
  require_valid(p);
  require_beta(beta);
  boost::math::quadrature::exp_sinh<double> es;
  double k = beta * p.v_F;
  double p0 = pi / p.a_tilde;
  auto f = [&](double u) { return log_one_minus_exp(k * (p0 + u)); };
  double integral = es.integrate(f);
  return 4.0 / p.a_tilde * integral / (2 * pi * beta);
}

}  // namespace mattis
