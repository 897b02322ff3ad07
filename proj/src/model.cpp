#include "mattis/model.hpp"

#include <cmath>

namespace mattis {

namespace {

bool on_grid(double value, double step, double offset) {
  double n = value / step - offset;
  return std::abs(n - std::round(n)) <= 1e-9 * std::max(1.0, std::abs(n));
}

bool in_cutoff(double q, const ModelParams& p) {
  double c = pi / p.a_tilde;
  return -c <= q && q < c;
}

// |p|^4 - A (2 p+ p-)^2 written as a sum of non-negative terms.
double radicand(const Momentum2& q, double A) {
  double d = q.plus * q.plus - q.minus * q.minus;
  double x = 2 * q.plus * q.minus;
  return d * d + (1 - A) * x * x;
}

bool generic_branch(const Momentum2& q, const ModelParams& p) {
  return p.gamma2 != 0 && chi(q, p) == 1 && q.plus != 0 && q.minus != 0;
}

}  // namespace

Momentum2 Momentum2::boson(std::int64_t n_plus, std::int64_t n_minus, const ModelParams& p) {
  double dp = p.dp();
  return {dp * static_cast<double>(n_plus), dp * static_cast<double>(n_minus),
          std::array<std::int64_t, 2>{n_plus, n_minus}, false};
}

Momentum2 Momentum2::fermion(std::int64_t n_plus, std::int64_t n_minus, const ModelParams& p) {
  double dp = p.dp();
  return {dp * (static_cast<double>(n_plus) + 0.5), dp * (static_cast<double>(n_minus) + 0.5),
          std::array<std::int64_t, 2>{n_plus, n_minus}, true};
}

Momentum2 Momentum2::operator-() const {
  Momentum2 m{-plus, -minus, std::nullopt, half_integer};
  if (index) {
    auto [a, b] = *index;
    m.index = half_integer ? std::array<std::int64_t, 2>{-a - 1, -b - 1}
                           : std::array<std::int64_t, 2>{-a, -b};
  }
  return m;
}

int chi(const Momentum2& q, const ModelParams& p) {
  if (q.index && !q.half_integer) {
    std::int64_t c = p.n_cut();
    auto [a, b] = *q.index;
    return (a >= -c && a <= c && b >= -c && b <= c) ? 1 : 0;
  }
  return (in_cutoff(q.plus, p) && in_cutoff(q.minus, p)) ? 1 : 0;
}

bool in_fermion_set(int s, const Momentum2& k, const ModelParams& p) {
  require_sign(s, "s");
  double dp = p.dp();
  if (!on_grid(k.plus, dp, 0.5) || !on_grid(k.minus, dp, 0.5)) return false;
  return in_cutoff(k[-s], p);
}

bool in_boson_set(int s, const Momentum2& q, const ModelParams& p) {
  require_sign(s, "s");
  if (q.index && !q.half_integer) {
    std::int64_t n = (*q.index)[s > 0 ? 1 : 0];
    return n >= -p.n_cut() && n <= p.n_cut();
  }
  double dp = p.dp();
  if (!on_grid(q.plus, dp, 0) || !on_grid(q.minus, dp, 0)) return false;
  return in_cutoff(q[-s], p);
}

bool in_boson_set_hat(int s, const Momentum2& q, const ModelParams& p) {
  if (!in_boson_set(s, q, p)) return false;
  if (q.index && !q.half_integer) return (*q.index)[s > 0 ? 0 : 1] != 0;
  return q[s] != 0;
}

bool in_lattice_1d(double x, const ModelParams& p) {
  double L = p.L();
  return on_grid(x, p.a_tilde, 0) && -L / 2 <= x && x < L / 2;
}

bool in_boson_set_1d(double q, const ModelParams& p) { return on_grid(q, p.dp(), 0) && in_cutoff(q, p); }

bool in_boson_set_1d_hat(double q, const ModelParams& p) { return in_boson_set_1d(q, p) && q != 0; }

bool in_position_set(int s, double x_plus, double x_minus, const ModelParams& p) {
  require_sign(s, "s");
  double L = p.L();
  double xs = s > 0 ? x_plus : x_minus;
  double xo = s > 0 ? x_minus : x_plus;
  return -L / 2 <= xs && xs < L / 2 && in_lattice_1d(xo, p);
}

double omega(int s, const Momentum2& q, const ModelParams& p) {
  require_sign(s, "s");
  return mode_data(q, p, derived(p)).omega[s > 0 ? 0 : 1];
}

double omega_tilde(int s, const Momentum2& q, const ModelParams& p) {
  require_sign(s, "s");
  DerivedConstants d = derived(p);
  return d.v_tilde * std::sqrt(d.A) * std::abs(q[s]);
}

double g_angular(int s, double theta, double A) {
  require_sign(s, "s");
  double s2 = std::sin(2 * theta), c2 = std::cos(2 * theta);
  double w = std::sqrt(c2 * c2 + (1 - A) * s2 * s2);
  if (s > 0) return std::sqrt(0.5 * (1 + w));
  return std::abs(s2) * std::sqrt(0.5 * A / (1 + w));
}

Mat2 u_matrix(const Momentum2& q, const ModelParams& p) { return mode_data(q, p, derived(p)).U; }

ModeData mode_data(const Momentum2& q, const ModelParams& p, const DerivedConstants& d) {
  ModeData m{};
  m.chi = chi(q, p);
  m.a = p.v_F * (1 - p.gamma1 * m.chi);
  m.U = Mat2{{{1, 0}, {0, 1}}};
  if (!generic_branch(q, p)) {
    double g1 = p.gamma1 * m.chi;
    double f = p.v_F * std::sqrt(1 - g1 * g1);
    m.omega[0] = f * std::abs(q.plus);
    m.omega[1] = f * std::abs(q.minus);
    return m;
  }
  double n2 = q.norm2();
  double delta = q.plus * q.plus - q.minus * q.minus;
  double x = 2 * q.plus * q.minus;
  double root = std::sqrt(radicand(q, d.A));
  m.omega[0] = d.v_tilde * std::sqrt(0.5 * (n2 + root));
  m.omega[1] = d.v_tilde * std::abs(x) * std::sqrt(d.A / (2 * (n2 + root)));
  // 1 + c and 1 - c with c = delta / root, each evaluated without cancellation.
  double tiny = (1 - d.A) * x * x / root;
  double one_plus = delta >= 0 ? 1 + delta / root : tiny / (root - delta);
  double one_minus = delta >= 0 ? tiny / (root + delta) : 1 - delta / root;
  double diag = std::sqrt(0.5 * one_plus);
  double off = std::sqrt(0.5 * one_minus);
  double sign = (p.gamma2 * q.plus * q.minus > 0) ? 1.0 : -1.0;
  // Row/column 0 is s=+, 1 is s=-. Off-diagonal U_{s,-s} = -+ s * off.
  m.U[0][0] = diag;
  m.U[1][1] = diag;
  m.U[0][1] = -sign * off;
  m.U[1][0] = sign * off;
  return m;
}

cplx v_coeff(int s_prime, int r, int s, const Momentum2& q, const ModelParams& p) {
  require_sign(s_prime, "s'");
  require_sign(r, "r");
  require_sign(s, "s");
  double ps = q[s];
  if (ps == 0) throw invalid_input("v_coeff requires p_s != 0");
  ModeData md = mode_data(q, p, derived(p));
  double uss = md.U[s > 0 ? 0 : 1][s_prime > 0 ? 0 : 1];
  if (uss == 0) return 0;
  double w = md.omega[s_prime > 0 ? 0 : 1];
  double a = md.a;
  double val = uss * (ps * std::sqrt(a / w) + r * std::sqrt(w / a)) / std::sqrt(8 * pi);
  return {0, val};
}

double ground_state_energy(const ModelParams& p, Exec exec) {
  require_valid(p);
  const std::int64_t c = p.n_cut();
  const DerivedConstants d = derived(p);
  double total = 0;
  auto row = [&](std::int64_t m) {
    double acc = 0;
    for (int s : {1, -1}) {
      for (std::int64_t n = -c; n <= c; ++n) {
        if (n == 0) continue;
        Momentum2 q = s > 0 ? Momentum2::boson(n, m, p) : Momentum2::boson(m, n, p);
        acc += mode_data(q, p, d).omega[s > 0 ? 0 : 1] - p.v_F * std::abs(q[s]);
      }
    }
    return acc;
  };
  if (exec == Exec::serial) {
    for (std::int64_t m = -c; m <= c; ++m) total += row(m);
  } else {
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(thread_count())
    for (std::int64_t m = -c; m <= c; ++m) total += row(m);
  }
  return 0.5 * total;
}

}  // namespace mattis
