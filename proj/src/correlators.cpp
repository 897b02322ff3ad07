#include "mattis/correlators.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "mattis/theta.hpp"
#include "mattis/thermo.hpp"

namespace mattis {

namespace {

constexpr cplx I{0, 1};

struct Kernel {
  int r1, s1, r2, s2;
  double x_plus, x_minus;
  cplx t;
  double eps;
  bool density;
};

void require_beta(double beta) {
  if (!(beta > 0)) throw invalid_input("beta must be positive (inf allowed)");
}

// e^{i w t} n_B(w) and e^{-i w t} (1 + n_B(w)).
std::pair<cplx, cplx> thermal(double w, cplx t, double beta) {
  if (std::isinf(beta)) return {0.0, std::exp(-I * w * t)};
  double den = -std::expm1(-beta * w);
  return {std::exp(I * w * t - beta * w) / den, std::exp(-I * w * t) / den};
}

cplx grid_sum(const ModelParams& p, double beta, const Kernel& k, Exec exec) {
  const DerivedConstants d = derived(p);
  const std::int64_t c = p.n_cut();
  const double L = p.L();
  const double h = p.dp();
  const int i1 = k.s1 > 0 ? 0 : 1, i2 = k.s2 > 0 ? 0 : 1;
  const double norm = 1 / (8 * pi);

  auto row = [&](std::int64_t np) {
    cplx acc = 0;
    for (std::int64_t nm = -c; nm <= c; ++nm) {
      std::int64_t n1 = k.s1 > 0 ? np : nm;
      std::int64_t n2 = k.s2 > 0 ? np : nm;
      if (n1 == 0 || n2 == 0) continue;
      Momentum2 q = Momentum2::boson(np, nm, p);
      ModeData md = mode_data(q, p, d);
      double p1 = q[k.s1], p2 = q[k.s2];
      double w = k.density ? 1 / (p.a_tilde * L * L) : k.r1 * k.r2 * p.a_tilde * h * h / (p1 * p2);
      double damp = std::exp(-0.5 * k.eps * (std::abs(p1) + std::abs(p2)));
      cplx phase = std::exp(-I * (q.plus * k.x_plus + q.minus * k.x_minus));
      cplx bracket = 0;
      for (int sp = 0; sp < 2; ++sp) {
        double u1 = md.U[i1][sp], u2 = md.U[i2][sp];
        if (u1 == 0 || u2 == 0) continue;
        double om = md.omega[sp];
        double sa = std::sqrt(md.a / om), sw = std::sqrt(om / md.a);
        double ap = u1 * (p1 * sa + k.r1 * sw) * u2 * (p2 * sa + k.r2 * sw);
        double am = u1 * (-p1 * sa + k.r1 * sw) * u2 * (-p2 * sa + k.r2 * sw);
        auto [tp, tm] = thermal(om, k.t, beta);
        bracket += ap * tp + am * tm;
      }
      acc += w * damp * norm * phase * bracket;
    }
    return acc;
  };

  double re = 0, im = 0;
  if (exec == Exec::serial) {
    for (std::int64_t np = -c; np <= c; ++np) {
      cplx v = row(np);
      re += v.real();
      im += v.imag();
    }
  } else {
#pragma omp parallel for schedule(static) reduction(+ : re, im) num_threads(thread_count())
    for (std::int64_t np = -c; np <= c; ++np) {
      cplx v = row(np);
      re += v.real();
      im += v.imag();
    }
  }
  return {re, im};
}

// sum_{m=-c}^{c} e^{-i (2 pi / L) m x}
double dirichlet(double x, const ModelParams& p) {
  const double N = static_cast<double>(p.l_over_a);
  double u = x / p.a_tilde;
  double k = std::round(u);
  if (std::abs(u - k) < 1e-9) {
    double r = std::fmod(k, N);
    return r == 0 ? N : 0.0;
  }
  double half = pi * x / p.L();
  return std::sin(N * half) / std::sin(half);
}

// sum_{n > c} z^n / n for |z| < 1
cplx log_tail(cplx z, std::int64_t c) {
  if (std::abs(z) < 0.9) {
    cplx zn = std::pow(z, static_cast<double>(c + 1));
    cplx acc = 0;
    for (std::int64_t n = c + 1; n < c + 2000; ++n) {
      cplx term = zn / static_cast<double>(n);
      acc += term;
      if (std::abs(term) < 1e-18 * std::abs(acc)) break;
      zn *= z;
    }
    return acc;
  }
  cplx acc = -std::log(1.0 - z);
  cplx zn = 1;
  for (std::int64_t n = 1; n <= c; ++n) {
    zn *= z;
    acc -= zn / static_cast<double>(n);
  }
  return acc;
}

// sum_{n > c} n z^n = z^{c+1} (c + 1 - c z) / (1 - z)^2
cplx linear_tail(cplx z, std::int64_t c) {
  double cc = static_cast<double>(c);
  cplx omz = 1.0 - z;
  return std::pow(z, cc + 1) * (cc + 1 - cc * z) / (omz * omz);
}

// Modes outside the cutoff (chi = 0): only diagonal flavour pairs contribute.
cplx tail_sum(const ModelParams& p, double beta, const Kernel& k) {
  if (k.s1 != k.s2 || k.r1 != k.r2) return 0;
  const int r = k.r1, s = k.s1;
  const double xs = s > 0 ? k.x_plus : k.x_minus;
  const double xo = s > 0 ? k.x_minus : k.x_plus;
  const double D = dirichlet(xo, p);
  if (D == 0) return 0;
  const std::int64_t c = p.n_cut();
  const double L = p.L(), h = p.dp(), v = p.v_F;
  const cplx w = k.eps - I * (r * xs - v * k.t);
  const cplx wb = k.eps + I * (r * xs) - I * v * k.t;
  const cplx z = std::exp(-h * w);

  cplx zero_t = k.density ? linear_tail(z, c) : log_tail(z, c);
  cplx thermal_part = 0;
  if (!std::isinf(beta)) {
    const std::int64_t max_n = c + 100'000'000;
    for (std::int64_t n = c + 1;; ++n) {
      if (n > max_n) throw non_convergence("thermal tail of the correlator sum", std::abs(thermal_part));
      double dn = static_cast<double>(n);
      double bw = beta * v * h * dn;
      double den = -std::expm1(-bw);
      cplx term = (std::exp(-h * dn * w - bw) + std::exp(-h * dn * wb - bw)) / den;
      term *= k.density ? dn : 1 / dn;
      thermal_part += term;
      if (std::abs(term) < 1e-17 * std::abs(thermal_part) || std::abs(term) < 1e-300) break;
    }
  }
  cplx total = zero_t + thermal_part;
  if (k.density) return D / (p.a_tilde * L * L * L) * total;
  return p.a_tilde * D / L * total;
}

cplx kernel_value(const ModelParams& p, double beta, const Kernel& k, Exec exec) {
  return grid_sum(p, beta, k, exec) + tail_sum(p, beta, k);
}

void require_on_lattice(double x, const ModelParams& p, const char* what) {
  double u = x / p.a_tilde;
  if (std::abs(u - std::round(u)) > 1e-9 * std::max(1.0, std::abs(u)))
    throw invalid_input(std::string(what) + " must lie on the a-lattice");
}

std::int64_t site_of(double x, const ModelParams& p) { return static_cast<std::int64_t>(std::llround(x / p.a_tilde)); }

cplx npoint_finite(const CorrelatorQuery& q, const ModelParams& p, Exec exec) {
  const auto& ins = q.insertions;
  std::vector<KleinLabel> labels;
  labels.reserve(ins.size());
  for (const auto& f : ins) labels.push_back({f.q, f.r, f.s, site_of(f.s > 0 ? f.x_minus : f.x_plus, p)});
  int vev = klein_vev(labels);
  if (vev == 0) return 0;

  std::map<std::pair<int, int>, double> log_g;
  cplx lv = 0;
  for (const auto& f : ins) {
    auto key = std::make_pair(f.r, f.s);
    auto it = log_g.find(key);
    if (it == log_g.end()) {
      Kernel k{f.r, f.s, f.r, f.s, 0, 0, 0.0, q.epsilon, false};
      double lg = std::log(2 * pi * p.a_tilde * q.epsilon) + kernel_value(p, q.beta, k, exec).real();
      it = log_g.emplace(key, lg).first;
    }
    lv -= 0.5 * it->second;
  }
  for (std::size_t j = 0; j < ins.size(); ++j) {
    for (std::size_t l = j + 1; l < ins.size(); ++l) {
      const auto& a = ins[j];
      const auto& b = ins[l];
      Kernel k{a.r, a.s, b.r, b.s, a.x_plus - b.x_plus, a.x_minus - b.x_minus, a.t - b.t, q.epsilon, false};
      lv -= static_cast<double>(a.q * b.q) * kernel_value(p, q.beta, k, exec);
    }
  }
  return static_cast<double>(vev) * std::exp(lv);
}

void validate_query(const CorrelatorQuery& q, const ModelParams& p) {
  require_valid(p);
  require_beta(q.beta);
  if (!(q.epsilon > 0)) throw invalid_input("epsilon must be positive");
  if (q.insertions.empty()) throw invalid_input("at least one insertion is required");
  for (const auto& f : q.insertions) {
    require_sign(f.q, "q");
    require_sign(f.r, "r");
    require_sign(f.s, "s");
    require_on_lattice(f.s > 0 ? f.x_minus : f.x_plus, p, "x_{-s}");
    require_admissible_time(f.t, q.beta);
  }
}

ModelParams with_size(const ModelParams& p, std::int64_t n) {
  ModelParams out = p;
  out.l_over_a = n;
  return out;
}

template <class F>
Extrapolated extrapolate_sizes(const ModelParams& p, F&& value_at) {
  std::vector<double> h;
  std::vector<cplx> f;
  for (std::int64_t n : ir_sizes(p.l_over_a)) {
    ModelParams pn = with_size(p, n);
    h.push_back(1 / pn.L());
    f.push_back(value_at(pn));
  }
  return extrapolate_to_zero(h, f);
}

}  // namespace

void require_admissible_time(cplx t, double beta) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw invalid_input("time must be finite");
  if (t.imag() == 0) return;
  if (t.real() != 0) throw invalid_input("time must be real or -i tau");
  double tau = -t.imag();
  if (tau < 0 || tau > beta) throw invalid_input("imaginary time tau must lie in [0, beta]");
}

cplx ln_G(const ModelParams& p, double beta, FlavorIndex f1, FlavorIndex f2, double x_plus, double x_minus, cplx t,
          double epsilon, Exec exec) {
  require_valid(p);
  require_beta(beta);
  require_sign(f1.r, "r1");
  require_sign(f1.s, "s1");
  require_sign(f2.r, "r2");
  require_sign(f2.s, "s2");
  if (!(epsilon > 0)) throw invalid_input("epsilon must be positive");
  require_admissible_time(t, beta);
  Kernel k{f1.r, f1.s, f2.r, f2.s, x_plus, x_minus, t, epsilon, false};
  return kernel_value(p, beta, k, exec);
}

std::vector<std::int64_t> ir_sizes(std::int64_t l_over_a) {
  std::vector<std::int64_t> out;
  for (int j = 0; j < 4; ++j) out.push_back((std::int64_t{1} << j) * (l_over_a + 1) - 1);
  return out;
}

Extrapolated fermion_npoint_ir(const CorrelatorQuery& q, const ModelParams& p, Exec exec) {
  validate_query(q, p);
  return extrapolate_sizes(p, [&](const ModelParams& pn) { return npoint_finite(q, pn, exec); });
}

cplx fermion_npoint(const CorrelatorQuery& q, const ModelParams& p, Exec exec) {
  if (q.mode == CorrelatorMode::ir_limit) return fermion_npoint_ir(q, p, exec).value;
  validate_query(q, p);
  return npoint_finite(q, p, exec);
}

cplx density_two_point(const ModelParams& p, double beta, const DensityInsertion& a, const DensityInsertion& b,
                       double epsilon, CorrelatorMode mode, Exec exec) {
  require_valid(p);
  require_beta(beta);
  if (!(epsilon > 0)) throw invalid_input("epsilon must be positive");
  for (const auto* f : {&a, &b}) {
    require_sign(f->r, "r");
    require_sign(f->s, "s");
    require_on_lattice(f->s > 0 ? f->x_minus : f->x_plus, p, "x_{-s}");
    require_admissible_time(f->t, beta);
  }
  Kernel k{a.r, a.s, b.r, b.s, a.x_plus - b.x_plus, a.x_minus - b.x_minus, a.t - b.t, epsilon, true};
  if (mode == CorrelatorMode::finite_L) return kernel_value(p, beta, k, exec);
  return extrapolate_sizes(p, [&](const ModelParams& pn) { return kernel_value(pn, beta, k, exec); }).value;
}

double zero_mode_nn(const ModelParams& p, double beta, int r1, int s1, std::int64_t x1, int r2, int s2,
                    std::int64_t x2) {
  require_valid(p);
  require_beta(beta);
  require_sign(r1, "r1");
  require_sign(s1, "s1");
  require_sign(r2, "r2");
  require_sign(s2, "s2");
  const DerivedConstants d = derived(p);
  const double L = p.L();
  const double g1 = p.gamma1;
  double val = 0;
  if (s1 == s2 && x1 == x2) val += 1 / (d.A * (1 + g1)) + r1 * r2 / (1 - g1);
  if (s1 == -s2) val -= (p.a_tilde / L) * p.gamma2 / (d.A * (1 + g1) * (1 + g1));
  return val / (4 * pi * beta * p.v_F * L);
}

double zero_mode_generating(const ModelParams& p, double beta, const ZeroModeSource& m) {
  require_valid(p);
  require_beta(beta);
  const DerivedConstants d = derived(p);
  const double L = p.L();
  const double g1 = p.gamma1;
  std::map<std::pair<int, std::int64_t>, std::pair<double, double>> site;  // (s, x) -> (M, Delta)
  double total[2] = {0, 0};
  for (const auto& [key, val] : m) {
    auto [r, s, x] = key;
    require_sign(r, "r");
    require_sign(s, "s");
    if (x < 0 || x >= p.l_over_a) throw invalid_input("site index out of range");
    auto& e = site[{s, x}];
    e.first += val;
    e.second += r * val;
    total[s > 0 ? 0 : 1] += val;
  }
  double diag = 0;
  for (const auto& [key, e] : site) diag += e.first * e.first / (d.A * (1 + g1)) + e.second * e.second / (1 - g1);
  double cross = 2 * p.gamma2 / (d.A * (1 + g1) * (1 + g1)) * total[0] * total[1];
  double pref = 1 / (8 * pi * beta * p.v_F * L);
  return std::exp(-pref * diag + pref * (p.a_tilde / L) * cross);
}

double zero_mode_generating_exact(const ModelParams& p, double beta, const ZeroModeSource& m) {
  ThetaSumSpec base = zero_mode_quadratic_form(p, beta);
  Eigen::VectorXd phase = Eigen::VectorXd::Zero(base.dim());
  for (const auto& [key, val] : m) {
    auto [r, s, x] = key;
    phase(zero_mode_index(r, s, x, p)) += val / p.L();
  }
  ThetaSumSpec with(base.H, phase);
  double z0 = theta_sum(base, ThetaMode::exact).log_Z;
  double z1 = theta_sum(with, ThetaMode::exact).log_Z;
  return std::exp(z1 - z0);
}

}  // namespace mattis
