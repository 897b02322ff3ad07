#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mattis/bogoliubov.hpp"
#include "mattis/correlators.hpp"
#include "mattis/ed.hpp"
#include "mattis/klein.hpp"
#include "mattis/qft.hpp"
#include "mattis/special.hpp"
#include "mattis/thermo.hpp"

namespace mattis {

namespace {

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

ModelParams couplings(double g1, double g2) {
  ModelParams p;
  p.gamma1 = g1;
  p.gamma2 = g2;
  return p;
}

CriterionResult bogoliubov_closed_form(std::ostream& log, Exec) {
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> n(-100, 100);
  double worst_lambda = 0, worst_u = 0;
  int cases = 0;
  while (cases < 500) {
    ModelParams p;
    p.l_over_a = 201;
    p.a_tilde = 0.5 + std::abs(u(rng));
    p.v_F = 1.5 + u(rng);
    p.gamma1 = 0.9 * u(rng);
    p.gamma2 = 0.95 * u(rng) * (1 + p.gamma1);
    int a = n(rng), b = n(rng);
    if (a == 0 || b == 0) continue;
    Momentum2 q = Momentum2::boson(a, b, p);
    MattisBlock blk = mattis_block(q, p);
    DiagResult d = diagonalize(blk.form, blk.lambda0);
    Mat2 closed = u_matrix(q, p);
    double scale = p.v_F * std::sqrt(q.norm2());
    for (int k = 0; k < 2; ++k) {
      double w = omega(k == 0 ? 1 : -1, q, p);
      worst_lambda = std::max(worst_lambda, std::abs(p.v_F * d.lambda(k) - w) / scale);
      double best = 0;
      int col = 0;
      for (int c = 0; c < 2; ++c) {
        double dot = d.U(0, k) * closed[0][c] + d.U(1, k) * closed[1][c];
        if (std::abs(dot) > std::abs(best)) {
          best = dot;
          col = c;
        }
      }
      double sg = best < 0 ? -1 : 1;
      for (int r = 0; r < 2; ++r) worst_u = std::max(worst_u, std::abs(d.U(r, k) - sg * closed[r][col]));
    }
    ++cases;
  }
  log << fmt("  500 random generic momenta: max |lambda - omega| / (v_F |p|) = %.3e, max U deviation = %.3e\n",
             worst_lambda, worst_u);
  bool ok = worst_lambda <= 1e-10 && worst_u <= 1e-10;
  return {1, "", ok, fmt("lambda dev %.2e, U dev %.2e (tol 1e-10)", worst_lambda, worst_u)};
}

CriterionResult dispersion_identities(std::ostream& log, Exec) {
  const std::pair<double, double> pairs[] = {{0, 0},     {0.3, 0},     {-0.3, 0.2}, {0.5, 0.5},  {0.7, -0.3},
                                             {-0.5, 0.4}, {0.9, 1.5}, {-0.9, 0.05}, {0.2, -1.1}};
  double worst_sum = 0, worst_prod = 0;
  for (auto [g1, g2] : pairs) {
    ModelParams p = couplings(g1, g2);
    p.l_over_a = 1001;
    DerivedConstants d = derived(p);
    const std::int64_t c = p.n_cut();
    int count = 0;
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        std::int64_t a = -c + (2 * c * i) / 31, b = -c + (2 * c * j) / 31 + (i % 3);
        if (a == 0 && b == 0) continue;
        if (++count > 1000) break;
        Momentum2 q = Momentum2::boson(a, std::clamp(b, -c, c), p);
        ModeData m = mode_data(q, p, d);
        double n2 = q.norm2();
        double vt2 = d.v_tilde * d.v_tilde;
        double sum = m.omega[0] * m.omega[0] + m.omega[1] * m.omega[1];
        worst_sum = std::max(worst_sum, std::abs(sum - vt2 * n2) / (vt2 * n2));
        double prod = m.omega[0] * m.omega[1];
        double target = vt2 * std::sqrt(d.A) * std::abs(q.plus * q.minus);
        if (target == 0)
          worst_prod = std::max(worst_prod, prod == 0 ? 0.0 : 1.0);
        else
          worst_prod = std::max(worst_prod, std::abs(prod - target) / target);
      }
    }
  }
  log << fmt("  9 coupling pairs x 1000 momenta: sum rule %.3e, product rule %.3e (relative)\n", worst_sum, worst_prod);
  bool ok = worst_sum <= 1e-12 && worst_prod <= 1e-12;
  return {2, "", ok, fmt("sum %.2e, product %.2e (tol 1e-12)", worst_sum, worst_prod)};
}

CriterionResult qft_free_energy(std::ostream& log, Exec exec) {
  bool ok_a = true;
  double worst_a = 0;
  for (double g1 : {0.0, 0.5}) {
    ModelParams p = couplings(g1, 0);
    p.l_over_a = 201;
    double beta = 20 * p.a_tilde / p.v_F;
    FreeEnergyBreakdown f = free_energy(p, beta, ZeroModeMode::theta, exec);
    double L = p.L();
    double got = p.a_tilde * (f.omega_B + f.omega_Q) / (L * L);
    double want = qft_free_energy_density(p, beta);
    double rel = std::abs(got - want) / std::abs(want);
    double casimir = std::pow(beta * derived(p).v_tilde / L, 2);
    worst_a = std::max(worst_a, rel);
    ok_a = ok_a && rel <= 1e-4;
    log << fmt("  3a gamma1=%.1f: a(Omega-E0)/L^2 = %.12g, QFT = %.12g, rel dev %.3e; finite-L Casimir (beta v~/L)^2 = %.3e\n",
               g1, got, want, rel, casimir);
  }
  ModelParams p = couplings(0.5, 0.5);
  double beta = 1;
  double want = qft_free_energy_density(p, beta);
  std::vector<double> errs;
  for (double a : {0.4, 0.2, 0.1}) {
    p.a_tilde = a;
    SplitResult s = free_energy_split(p, beta);
    double got = a * (s.omega_less + s.omega_greater);
    errs.push_back(std::abs(got - want) / std::abs(want));
    log << fmt("  3b a=%.2f: a(Omega<+Omega>) = %.12g, QFT = %.12g, rel dev %.3e (quad err %.1e)\n", a, got, want,
               errs.back(), s.error_estimate);
  }
  bool monotone = errs[0] > errs[1] && errs[1] > errs[2];
  bool ok_b = monotone && errs.back() <= 0.01;
  std::string detail =
      fmt("3a rel dev %.2e (tol 1e-4) %s; 3b rel dev %.2e->%.2e->%.2e (tol 1e-2, monotone) %s", worst_a,
          ok_a ? "ok" : "FAIL", errs[0], errs[1], errs[2], ok_b ? "ok" : "FAIL");
  return {3, "", ok_a && ok_b, detail};
}

CriterionResult zero_mode_sector(std::ostream& log, Exec) {
  bool ok = true;
  int applied = 0;
  constexpr double slack = 1e-13;
  for (auto [g1, g2] : {std::pair{0.3, 0.2}, std::pair{0.5, 0.5}, std::pair{-0.4, 0.3}}) {
    for (std::int64_t N : {3, 5, 7}) {
      ModelParams p = couplings(g1, g2);
      p.l_over_a = N;
      double beta = 1;
      ZeroModeSum z = zero_mode_partition(p, beta);
      bool has_bound = std::isfinite(z.bound);
      double f_exact = zero_mode_free_energy(p, beta, ZeroModeMode::theta);
      double f_closed = zero_mode_free_energy(p, beta, ZeroModeMode::closed);
      double gap = beta * (f_closed - f_exact);  // = ln(Z/J)
      bool here = z.ratio_minus_one >= -slack;
      if (has_bound) {
        ++applied;
        here = here && z.ratio_minus_one <= z.bound * (1 + 1e-12) + slack && gap <= std::log1p(z.bound) + slack;
      }
      ok = ok && here;
      log << fmt("  (%.1f,%.1f) N=%ld: Z/J-1 = %.3e, bound = %.3e, beta(Omega_closed-Omega_exact) = %.3e %s\n", g1, g2,
                 static_cast<long>(N), z.ratio_minus_one, z.bound, gap, here ? "" : "<-- violation");
    }
  }
  // Generic ellipsoid enumeration on the full 4-dimensional form against the structured sum.
  ModelParams p = couplings(0.3, 0.2);
  p.l_over_a = 1;
  ThetaResult t = theta_sum(zero_mode_quadratic_form(p, 1.0), ThetaMode::exact);
  ZeroModeSum z = zero_mode_partition(p, 1.0);
  double cross = std::abs(t.log_Z - z.log_Z);
  bool generic_ok = cross <= 1e-11 && t.ratio_minus_one >= -slack &&
                    (!t.preconditions_met || t.ratio_minus_one <= t.bound + slack);
  log << fmt("  generic theta sum (M=4, %ld points) vs structured: |dlog Z| = %.2e, Z/J-1 = %.3e, bound = %.3e\n",
             static_cast<long>(t.points), cross, t.ratio_minus_one, t.bound);
  ok = ok && generic_ok && applied > 0;
  return {4, "", ok, fmt("%d bounded cases, generic cross-check %.1e", applied, cross)};
}

CriterionResult bosonization_oracle(std::ostream& log, Exec) {
  double worst = 0;
  for (int n : {12, 16, 20}) {
    for (int r : {1, -1}) {
      TruncatedChiralSpace sp(r, static_cast<double>(n), n);
      LowSector low = make_low_sector(sp, 1e300);
      const int half = static_cast<int>(std::floor(0.5 * sp.k_cut() / sp.dk()));
      double dc = 0, db = 0;
      for (int m = -half; m <= half; ++m) {
        for (int mp = -half; mp <= half; ++mp) {
          if (std::abs(m + mp) > half) continue;
          dc = std::max(dc, check_density_commutator(sp, low, m * sp.dk(), mp * sp.dk()));
          if (m > 0 && mp > 0) db = std::max(db, check_boson_ccr(sp, low, m * sp.dk(), mp * sp.dk()));
        }
      }
      double dk = check_kronig(sp, low);
      worst = std::max({worst, dc, dk, db});
      log << fmt("  %d modes r=%+d (%zu sector states): commutator %.2e, Kronig %.2e, boson CCR %.2e\n", n, r,
                 low.states.size(), dc, dk, db);
    }
  }
  return {5, "", worst <= 1e-12, fmt("max deviation %.2e (tol 1e-12)", worst)};
}

// Independent oracle: enumerate every perfect pairing, signature from the crossing parity.
int pairing_oracle(std::vector<int> idx, const std::vector<KleinLabel>& s) {
  if (idx.empty()) return 1;
  int first = idx[0];
  int total = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const auto& a = s[first];
    const auto& b = s[idx[j]];
    if (!(a.q == -b.q && a.r == b.r && a.s == b.s && a.x == b.x)) continue;
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    int sign = (j % 2 == 1) ? 1 : -1;
    total += sign * pairing_oracle(rest, s);
  }
  return total;
}

int two_factor_vev(const KleinLabel& a, const KleinLabel& b) {
  return a.q == -b.q && a.r == b.r && a.s == b.s && a.x == b.x;
}

CriterionResult klein_combinatorics(std::ostream& log, Exec) {
  std::vector<KleinLabel> alphabet;
  for (int q : {1, -1})
    for (int r : {1, -1})
      for (int s : {1, -1})
        for (std::int64_t x : {0, 1}) alphabet.push_back({q, r, s, x});
  long mismatches = 0, checked = 0;
  std::vector<KleinLabel> seq;
  std::function<void(int)> rec = [&](int depth) {
    if (!seq.empty()) {
      int want = 0;
      if (seq.size() == 2) want = two_factor_vev(seq[0], seq[1]);
      if (seq.size() == 4)
        want = two_factor_vev(seq[0], seq[1]) * two_factor_vev(seq[2], seq[3]) - two_factor_vev(seq[0], seq[2]) * two_factor_vev(seq[1], seq[3]) +
               two_factor_vev(seq[0], seq[3]) * two_factor_vev(seq[1], seq[2]);
      ++checked;
      if (klein_vev(seq) != want) ++mismatches;
    }
    if (depth == 4) return;
    for (const auto& l : alphabet) {
      seq.push_back(l);
      rec(depth + 1);
      seq.pop_back();
    }
  };
  rec(0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 8), bit(0, 1), xs(0, 2);
  long random_mismatch = 0;
  for (int i = 0; i < 10000; ++i) {
    int n = len(rng);
    std::vector<KleinLabel> s;
    for (int k = 0; k < n; ++k) s.push_back({bit(rng) ? 1 : -1, bit(rng) ? 1 : -1, bit(rng) ? 1 : -1, xs(rng)});
    std::vector<int> idx(n);
    for (int k = 0; k < n; ++k) idx[k] = k;
    int want = n % 2 ? 0 : pairing_oracle(idx, s);
    if (klein_vev(s) != want) ++random_mismatch;
  }
  log << fmt("  exhaustive N<=4: %ld sequences, %ld mismatches; random N<=8: 10000 sequences, %ld mismatches\n",
             checked, mismatches, random_mismatch);
  return {6, "", mismatches == 0 && random_mismatch == 0,
          fmt("%ld exhaustive + 10000 random, %ld mismatches", checked, mismatches + random_mismatch)};
}

CorrelatorQuery two_point(double x, double eps) {
  return CorrelatorQuery{{{1, 1, 1, x, 0, 0.0}, {-1, 1, 1, 0, 0, 0.0}}, eps, inf, CorrelatorMode::finite_L};
}

CriterionResult two_point_cross(std::ostream& log, Exec exec) {
  bool ok = true;
  double worst_fin = 0;
  for (double g1 : {0.3, 0.5}) {
    ModelParams p = couplings(g1, 0);
    for (double xa : {0.5, 1.0, 1.5}) {
      double x = xa * p.a_tilde, eps = 1e-3 * p.a_tilde;
      CorrelatorQuery q = two_point(x, eps);
      cplx cf = fermion2pt_ir_g2zero(p, 1, x, 0.0, eps);
      ModelParams p1 = p, p2 = p;
      p1.l_over_a = 101;
      p2.l_over_a = 203;
      cplx f1 = fermion_npoint(q, p1, exec), f2 = fermion_npoint(q, p2, exec);
      Extrapolated rich = extrapolate_to_zero({1 / p1.L(), 1 / p2.L()}, {f1, f2});
      double e1 = std::abs(f1 - cf) / std::abs(cf), er = std::abs(rich.value - cf) / std::abs(cf);
      worst_fin = std::max(worst_fin, e1);
      bool here = e1 <= 0.05 && er < e1;
      ok = ok && here;
      log << fmt("  gamma1=%.1f x=%.1fa: N=101 rel dev %.3e, Richardson(101,203) rel dev %.3e %s\n", g1, xa, e1, er,
                 here ? "" : "<-- violation");
    }
  }
  ModelParams p = couplings(0, 0);
  double worst_free = 0;
  for (std::int64_t N : {101, 203}) {
    p.l_over_a = N;
    for (double xa : {0.5, 1.0, 3.0, 10.0}) {
      double x = xa * p.a_tilde, eps = 1e-3 * p.a_tilde, L = p.L();
      cplx got = fermion_npoint(two_point(x, eps), p, exec);
      cplx w = eps - cplx(0, 1) * x;
      cplx want = (1 / (2 * pi * p.a_tilde * eps)) * (1 - std::exp(-2 * pi * eps / L)) / (1.0 - std::exp(-2 * pi * w / L));
      worst_free = std::max(worst_free, std::abs(got - want) / std::abs(want));
    }
  }
  p.l_over_a = 201;
  double worst_ir = 0;
  for (double xa : {0.5, 1.0, 3.0}) {
    double x = xa * p.a_tilde, eps = 1e-3 * p.a_tilde;
    CorrelatorQuery q = two_point(x, eps);
    Extrapolated e = fermion_npoint_ir(q, p, exec);
    cplx want = 1.0 / (2 * pi * p.a_tilde * (eps - cplx(0, 1) * x));
    worst_ir = std::max(worst_ir, std::abs(e.value - want) / std::abs(want));
  }
  log << fmt("  free: finite-L propagator rel dev %.3e, IR extrapolation vs 1/(2 pi a w) rel dev %.3e\n", worst_free,
             worst_ir);
  ok = ok && worst_free <= 1e-8 && worst_ir <= 1e-8;
  return {7, "", ok, fmt("interacting %.2e (tol 5e-2), free %.2e / IR %.2e (tol 1e-8)", worst_fin, worst_free, worst_ir)};
}

CriterionResult luttinger_exponent(std::ostream& log, Exec) {
  bool ok = true;
  double worst = 0;
  for (auto [g1, g2] : {std::pair{0.3, 0.0}, std::pair{0.5, 0.5}, std::pair{0.7, -0.3}}) {
    ModelParams p = couplings(g1, g2);
    const double L0 = 1;
    double C = c_constant(g1, g2).value;
    std::vector<double> lx, ly;
    for (int i = 0; i <= 200; ++i) {
      double x = L0 * std::pow(10.0, 1 + 2.0 * i / 200);
      QftTwoPoint v = fermion2pt_qft(p, 1, x, 0.0, L0, 1e-8 * L0, C);
      lx.push_back(std::log(x));
      ly.push_back(std::log(std::abs(v.value)));
    }
    double n = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      mx += lx[i] / n;
      my += ly[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    double slope = sxy / sxx;
    double K = derived(p).K;
    double dev = std::abs(slope + K);
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-3;
    log << fmt("  (%.1f,%.1f): slope %.10f, -K = %.10f, |diff| %.2e\n", g1, g2, slope, -K, dev);
  }
  return {8, "", ok, fmt("max |slope + K| %.2e (tol 1e-3)", worst)};
}

CriterionResult c_constant_check(std::ostream& log, Exec) {
  double worst_anchor = 0;
  for (double g1 : {-0.9, -0.5, 0.0, 0.5, 0.9}) worst_anchor = std::max(worst_anchor, std::abs(c_constant(g1, 0).value - 1));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst_scheme = 0;
  for (int i = 0; i < 20; ++i) {
    double g1 = 0.9 * u(rng);
    double g2 = 0.95 * u(rng) * (1 + g1);
    double a = c_constant(g1, g2, 1e-12, QuadScheme::gauss_kronrod).value;
    double b = c_constant(g1, g2, 1e-12, QuadScheme::tanh_sinh).value;
    worst_scheme = std::max(worst_scheme, std::abs(a - b));
  }
  // Smoothness of the gamma1 = gamma2 sweep: second differences of a smooth curve scale as h^2, so
  // D2(h) ~ 4 D2(h/2); a kink leaves D2(h) ~ 2 D2(h/2) and a jump D2(h) ~ D2(h/2).
  const double h = 0.05;
  auto cg = [](double x) { return c_constant(x, x).value; };
  std::vector<double> g, c;
  for (int i = 0; i <= 28; ++i) {
    g.push_back(-0.45 + h * i);
    c.push_back(cg(g.back()));
  }
  bool finite = std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v) && v > 0; });
  double at0 = c_constant(0, 0).value;
  double worst_smooth = 0;
  int rough = 0;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    double d_h = c[i + 1] - 2 * c[i] + c[i - 1];
    double d_half = cg(g[i] + h / 2) - 2 * c[i] + cg(g[i] - h / 2);
    double excess = std::abs(d_h - 4 * d_half) / (0.3 * std::abs(d_h) + 1e-4);
    worst_smooth = std::max(worst_smooth, excess);
    if (excess > 1) ++rough;
  }
  log << "  C(g,g):";
  for (std::size_t i = 0; i < c.size(); i += 4) log << fmt(" %.2f:%.6f", g[i], c[i]);
  log << fmt("\n  anchor |C(g1,0)-1| %.2e, scheme gap %.2e, C(0,0) = %.15f, h^2 scaling excess %.3f (<= 1), %d rough points\n",
             worst_anchor, worst_scheme, at0, worst_smooth, rough);
  bool ok = worst_anchor <= 1e-8 && worst_scheme <= 1e-8 && finite && std::abs(at0 - 1) <= 1e-8 && rough == 0;
  return {9, "", ok, fmt("anchor %.2e, schemes %.2e (tol 1e-8), sweep smooth", worst_anchor, worst_scheme)};
}

CriterionResult special_functions(std::ostream& log, Exec) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lr(std::log(0.01), std::log(40.0)), ar(-pi + 0.05, pi - 0.05);
  double worst_id = 0;
  int series = 0, cf = 0;
  int skipped = 0;
  for (int i = 0; i < 10000;) {
    std::complex<double> z = std::polar(std::exp(lr(rng)), ar(rng));
    // exp(E1) overflows a double once Re E1 passes ~700, deep in the left half-plane
    if (std::abs(exp_integral_e1(z).real()) > 600) {
      ++skipped;
      continue;
    }
    ++i;
    SigmaEval s = sigma(z);
    (s.method == E1Method::series ? series : cf)++;
    worst_id = std::max(worst_id, std::abs(s.value * std::exp(exp_integral_e1(z)) - 1.0));
  }
  double worst_switch = 0;
  for (int i = 0; i < 64; ++i) {
    double arg = -pi + 0.05 + (2 * pi - 0.1) * i / 63;
    std::complex<double> lo = std::polar(4.0 * (1 - 1e-13), arg), hi = std::polar(4.0 * (1 + 1e-13), arg);
    std::complex<double> a = exp_integral_e1(lo), b = exp_integral_e1(hi);
    worst_switch = std::max(worst_switch, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  double worst_small = 0, worst_large = 0;
  for (int i = 0; i < 2000; ++i) {
    std::complex<double> z = std::polar(0.01 * std::exp(lr(rng) - std::log(40.0)), ar(rng));
    if (std::abs(z) > 0.01) continue;
    double v = std::abs(sigma(z).value / (std::exp(euler_gamma) * z) - 1.0) / (2 * std::abs(z));
    worst_small = std::max(worst_small, v);
  }
  std::uniform_real_distribution<double> big(20, 200), half(-pi / 2, pi / 2);
  for (int i = 0; i < 2000; ++i) {
    std::complex<double> z = std::polar(big(rng), half(rng));
    double lhs = std::abs(sigma_minus_one(z) + std::exp(-z) / z);
    double rhs = 4 * std::abs(std::exp(-z)) / std::norm(z);
    worst_large = std::max(worst_large, lhs / rhs);
  }
  double e1_one = std::abs(exp_integral_e1(1.0) - 0.21938393439552);
  log << fmt("  identity %.2e over %d series + %d continued-fraction points (%d unrepresentable draws redrawn); "
             "switchover gap %.2e; E1(1) err %.1e\n",
             worst_id, series, cf, skipped, worst_switch, e1_one);
  log << fmt("  small-z bound ratio max %.3f (must be <= 1), large-z bound ratio max %.3f (must be <= 1)\n",
             worst_small, worst_large);
  bool ok = worst_id <= 1e-12 && series > 1000 && cf > 1000 && worst_switch <= 1e-12 && worst_small <= 1 &&
            worst_large <= 1 && e1_one <= 1e-13;
  return {10, "", ok, fmt("identity %.2e, switch %.2e, asymptotic ratios %.2f/%.2f", worst_id, worst_switch, worst_small,
                         worst_large)};
}

CriterionResult density_closed_form(std::ostream& log, Exec exec) {
  double worst = 0;
  for (double g1 : {0.0, 0.5}) {
    ModelParams p = couplings(g1, 0);
    p.l_over_a = 101;
    double eps = 1e-3 * p.a_tilde;
    for (double xa : {0.5, 1.0, 1.5, 3.0}) {
      for (double t : {0.0, 0.7}) {
        double x = xa * p.a_tilde;
        cplx got[3], want[3];
        double scale = 0;
        int i = 0;
        for (auto [r1, r2] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}}) {
          DensityInsertion a{r1, 1, x, 0, t}, b{r2, 1, 0, 0, 0.0};
          got[i] = p.a_tilde * density_two_point(p, inf, a, b, eps, CorrelatorMode::finite_L, exec);
          want[i] = density2pt_ir_g2zero(p, r1, r2, x, t, eps);
          scale = std::max(scale, std::abs(want[i]));
          ++i;
        }
        // the chirality-mixed channel vanishes identically at gamma1 = 0, so deviations are taken
        // relative to the largest channel at the same point
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(got[j] - want[j]) / scale);
      }
    }
    log << fmt("  gamma1=%.1f: worst rel dev so far %.3e\n", g1, worst);
  }
  return {11, "", worst <= 0.05, fmt("max rel dev %.2e (tol 5e-2)", worst)};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "bogoliubov-closed-form", bogoliubov_closed_form},
      {2, "dispersion-identities", dispersion_identities},
      {3, "qft-free-energy", qft_free_energy},
      {4, "zero-mode-theta-bound", zero_mode_sector},
      {5, "bosonization-oracle", bosonization_oracle},
      {6, "klein-combinatorics", klein_combinatorics},
      {7, "two-point-cross-validation", two_point_cross},
      {8, "luttinger-exponent", luttinger_exponent},
      {9, "c-constant", c_constant_check},
      {10, "special-functions", special_functions},
      {11, "density-closed-form", density_closed_form},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, std::ostream& log, const std::vector<int>& ids,
                                            Exec exec) {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    log << "criterion " << c.id << " (" << c.name << ")\n";
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run(log, exec);
    } catch (const std::exception& e) {
      r = {c.id, "", false, std::string("exception: ") + e.what()};
    }
    r.id = c.id;
    r.name = c.name;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << fmt(" [%.1fs]", secs)
        << "\n";
    out.flush();
    results.push_back(r);
  }
  return results;
}

}  // namespace mattis
