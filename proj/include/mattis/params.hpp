#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace mattis {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double inf = std::numeric_limits<double>::infinity();

// Thrown for inputs that violate a documented precondition.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an iterative or adaptive numeric routine misses its tolerance.
struct non_convergence : std::runtime_error {
  double achieved_error = 0.0;
  non_convergence(const std::string& what, double err)
      : std::runtime_error(what), achieved_error(err) {}
};

struct ModelParams {
  double v_F = 1.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double a_tilde = 1.0;
  std::int64_t l_over_a = 1;
  double beta = inf;

  double L() const { return static_cast<double>(l_over_a) * a_tilde; }
  double dp() const { return 2.0 * pi / L(); }
  // Largest |n| with -pi/a <= 2 pi n / L < pi/a.
  std::int64_t n_cut() const { return (l_over_a - 1) / 2; }
};

struct DerivedConstants {
  double A;
  double v_tilde;
  double B;
  double K;
};

// Returns the first violated constraint, or nothing when the parameters are admissible.
std::optional<std::string> validate_params(const ModelParams& p);
void require_valid(const ModelParams& p);

DerivedConstants derived(double v_F, double gamma1, double gamma2);
inline DerivedConstants derived(const ModelParams& p) { return derived(p.v_F, p.gamma1, p.gamma2); }

struct FlavorIndex {
  int r = 1;
  int s = 1;
};

inline bool is_sign(int x) { return x == 1 || x == -1; }
void require_sign(int x, const char* what);

}  // namespace mattis
