#include "mattis/qft.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "mattis/correlators.hpp"
#include "mattis/special.hpp"

namespace mattis {

namespace {

constexpr cplx I{0, 1};
constexpr double edge = 1e-4;

void require_g2zero(const ModelParams& p) {
  ModelParams q = p;
  q.l_over_a = 1;
  require_valid(q);
  if (p.gamma2 != 0) throw invalid_input("this closed form requires gamma2 = 0");
}

double raw_integrand(double theta, const DerivedConstants& d) {
  const double A = d.A, B = d.B, sa = std::sqrt(A);
  double s2 = std::sin(2 * theta), c2 = std::cos(2 * theta);
  double R = std::sqrt(c2 * c2 + (1 - A) * s2 * s2);
  double wp = 0.25, wm = 0.25, R_plus_c2 = R + c2;
  if (R > 0) {
    double gap = (1 - A) * s2 * s2 / R;
    wp = c2 >= 0 ? 0.25 * (1 + c2 / R) : 0.25 * gap / (R - c2);
    wm = c2 >= 0 ? 0.25 * gap / (R + c2) : 0.25 * (1 - c2 / R);
    if (c2 < 0) R_plus_c2 = gap * R / (R - c2);
  }
  double gp = g_angular(1, theta, A);
  double c = std::cos(theta), c_sq = c * c;
  // g_- = |cos| gh with gh -> sqrt(A) at pi/2; there w_- = 1/2 - w_+ and K = (B/sa + sa/B)/2 are
  // folded together so the O(cos^2) remainder is computed without cancellation.
  double gh = std::sin(theta) * std::sqrt(2 * A / (1 + R));
  double inner;
  if (c2 >= 0) {
    inner = wm * (B / gh + gh / B) - d.K;
  } else {
    double sa_minus_gh = A * R_plus_c2 / ((1 + R) * (sa + gh));
    inner = -wp * (B / gh + gh / B) + 0.5 * sa_minus_gh * (B * B - gh * sa) / (gh * sa * B);
  }
  double bracket = wp * (B * c_sq / gp + gp / B) + std::abs(c) * inner;
  double measure = theta < pi / 4 ? c : std::sin(theta);
  return bracket / (c_sq * measure);
}

double integrand(double theta, const DerivedConstants& d) {
  if (theta < edge) {
    double f1 = raw_integrand(edge, d), f2 = raw_integrand(2 * edge, d);
    return f1 + (theta - edge) * (f2 - f1) / edge;
  }
  double phi = pi / 2 - theta;
  if (phi < edge) {
    double f1 = raw_integrand(pi / 2 - edge, d), f2 = raw_integrand(pi / 2 - 2 * edge, d);
    return f1 + (phi - edge) * (f2 - f1) / edge;
  }
  return raw_integrand(theta, d);
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk_segment(F& f, double a, double b) {
  double e = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0, &e);
  // boost reports the error on the reference interval [-1, 1]
  return {a, b, v, e * 0.5 * (b - a)};
}

// Globally adaptive GK31 bisection on the segment with the largest error.
template <class F>
double adaptive_gk(F f, double a, double b, double rel_tol, double* error, int max_segments = 4000) {
  std::priority_queue<Segment> q;
  Segment s0 = gk_segment(f, a, b);
  q.push(s0);
  double total = s0.value, err = s0.error;
  while (err > rel_tol * std::max(1.0, std::abs(total)) && static_cast<int>(q.size()) < max_segments) {
    Segment s = q.top();
    q.pop();
    double mid = 0.5 * (s.a + s.b);
    Segment l = gk_segment(f, s.a, mid), r = gk_segment(f, mid, s.b);
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    q.push(l);
    q.push(r);
  }
  total = 0;
  err = 0;
  for (; !q.empty(); q.pop()) {
    total += q.top().value;
    err += q.top().error;
  }
  *error = err;
  return total;
}

}  // namespace

double c_integrand(double theta, double gamma1, double gamma2) {
  return integrand(theta, derived(1.0, gamma1, gamma2));
}

CConstant c_constant(double gamma1, double gamma2, double tol, QuadScheme scheme) {
  ModelParams p;
  p.gamma1 = gamma1;
  p.gamma2 = gamma2;
  require_valid(p);
  if (!(tol >= 1e-14)) throw invalid_input("tol must be >= 1e-14");
  const DerivedConstants d = derived(p);
  auto f = [&](double th) { return integrand(th, d); };
  double total = 0, err = 0;
  for (auto [a, b] : {std::pair{0.0, pi / 4}, std::pair{pi / 4, pi / 2}}) {
    double e = 0, l1 = 0;
    double v;
    if (scheme == QuadScheme::gauss_kronrod) {
      v = adaptive_gk(f, a, b, tol, &e);
    } else {
      boost::math::quadrature::tanh_sinh<double> ts;
      v = ts.integrate(f, a, b, tol, &e, &l1);
    }
    total += v;
    err += e;
  }
  double C = std::exp(-total);
  double achieved = C * err;
  if (!(err <= tol * std::max(1.0, std::abs(total))))
    throw non_convergence("c_constant quadrature", achieved);
  return {C, achieved};
}

cplx fermion2pt_ir_g2zero(const ModelParams& p, int r, double x_s, cplx t, double epsilon) {
  require_g2zero(p);
  require_sign(r, "r");
  if (!(epsilon > 0)) throw invalid_input("epsilon must be positive");
  require_admissible_time(t, inf);
  const DerivedConstants d = derived(p);
  const double K = d.K, a = p.a_tilde, vt = d.v_tilde, k = pi / a;
  cplx w1 = epsilon - I * (r * x_s - vt * t);
  cplx u1 = epsilon + I * (vt * t + x_s);
  cplx u2 = epsilon + I * (vt * t - x_s);
  cplx z1 = k * w1;
  cplx z2 = k * (epsilon + I * (r * x_s + vt * t));
  cplx z3 = k * (epsilon - I * (r * x_s - p.v_F * t));
  cplx logF = -0.5 * (K + 1) * exp_integral_e1(z1) - 0.5 * (K - 1) * exp_integral_e1(z2) + exp_integral_e1(z3);
  cplx log_power = (K - 1) * std::log(a) - 0.5 * (K - 1) * (std::log(u1) + std::log(u2));
  double pref = (1 / a) * std::pow(std::exp(euler_gamma) * pi, 1 - K) / (2 * pi);
  return pref * std::exp(logF + log_power) / w1;
}

QftTwoPoint fermion2pt_qft(const ModelParams& p, int r, double x_s, cplx t, double L0, double epsilon,
                           double c_value) {
  ModelParams q = p;
  q.l_over_a = 1;
  require_valid(q);
  require_sign(r, "r");
  if (!(L0 > 0)) throw invalid_input("L0 must be positive");
  if (!(epsilon > 0)) throw invalid_input("epsilon must be positive");
  require_admissible_time(t, inf);
  const DerivedConstants d = derived(p);
  const double K = d.K, vs = d.v_tilde * std::sqrt(d.A);
  double C = c_value > 0 ? c_value : c_constant(p.gamma1, p.gamma2).value;
  cplx w1 = epsilon - I * (r * x_s - vs * t);
  // (eps + i v t)^2 + x^2 = (eps + i (v t + x)) (eps + i (v t - x)), both in the right half-plane.
  cplx u1 = epsilon + I * (vs * t + x_s);
  cplx u2 = epsilon + I * (vs * t - x_s);
  if (!(u1.real() > 0 && u2.real() > 0)) throw invalid_input("power argument left the right half-plane");
  cplx log_power = (K - 1) * std::log(L0) - 0.5 * (K - 1) * (std::log(u1) + std::log(u2));
  QftTwoPoint out;
  out.value = C / (2 * pi) / w1 * std::exp(log_power);
  out.K = K;
  out.C = C;
  return out;
}

cplx density2pt_ir_g2zero(const ModelParams& p, int r1, int r2, double x_s, cplx t, double epsilon) {
  require_g2zero(p);
  require_sign(r1, "r1");
  require_sign(r2, "r2");
  if (!(epsilon > 0)) throw invalid_input("epsilon must be positive");
  require_admissible_time(t, inf);
  const DerivedConstants d = derived(p);
  const double B = d.B, a = p.a_tilde, vt = d.v_tilde, k = pi / a;
  const double bb = B + r1 * r2 / B;
  const double rs = r1 + r2;
  cplx wm = epsilon - I * (x_s - vt * t);
  cplx wp = epsilon + I * (x_s + vt * t);
  cplx e = 0;
  if (r1 == r2) e += 4.0 * alpha1(k * (epsilon - I * (r1 * x_s - p.v_F * t)));
  for (int rt : {1, -1}) e -= (bb + rt * rs) * alpha1(k * (epsilon - I * (rt * x_s - vt * t)));
  e *= k * k;
  cplx bracket = (bb + rs) / (wm * wm) + (bb - rs) / (wp * wp) + e;
  return bracket / (a * 4 * (2 * pi) * (2 * pi));
}

}  // namespace mattis
