#include "mattis/params.hpp"

#include <cmath>

namespace mattis {

std::optional<std::string> validate_params(const ModelParams& p) {
  if (!(std::isfinite(p.v_F) && p.v_F > 0)) return "v_F>0";
  if (!(std::abs(p.gamma1) < 1)) return "|gamma1|<1";
  if (!(std::abs(p.gamma2) < std::abs(1 + p.gamma1))) return "|gamma2|<|1+gamma1|";
  if (!(std::isfinite(p.a_tilde) && p.a_tilde > 0)) return "a_tilde>0";
  if (p.l_over_a < 1 || p.l_over_a % 2 == 0) return "l_over_a odd and >= 1";
  if (!(p.beta > 0)) return "beta>0";
  return std::nullopt;
}

void require_valid(const ModelParams& p) {
  if (auto v = validate_params(p)) throw invalid_input("parameter violation: " + *v);
}

DerivedConstants derived(double v_F, double gamma1, double gamma2) {
  double g = gamma2 / (1 + gamma1);
  DerivedConstants d{};
  d.A = 1 - g * g;
  d.v_tilde = v_F * std::sqrt(1 - gamma1 * gamma1);
  d.B = std::sqrt((1 - gamma1) / (1 + gamma1));
  double sa = std::sqrt(d.A);
  d.K = 0.5 * (sa / d.B + d.B / sa);
  return d;
}

void require_sign(int x, const char* what) {
  if (!is_sign(x)) throw invalid_input(std::string(what) + " must be +1 or -1");
}

}  // namespace mattis
