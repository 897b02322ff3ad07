#include "mattis/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "mattis/params.hpp"

namespace mattis {

namespace {

int popcount_below(std::uint32_t state, int j) {
  return std::popcount(state & ((std::uint32_t{1} << j) - 1));
}

void axpy(SparseVec& y, double a, const SparseVec& x) {
  for (const auto& [s, v] : x) y[s] += a * v;
}

double max_on(const SparseVec& v, const std::unordered_set<std::uint32_t>& keep) {
  double m = 0;
  for (const auto& [s, x] : v)
    if (keep.count(s)) m = std::max(m, std::abs(x));
  return m;
}

std::unordered_set<std::uint32_t> as_set(const LowSector& low) { return {low.states.begin(), low.states.end()}; }

void require_half_window(const TruncatedChiralSpace& space, int m) {
  if (std::abs(m) * space.dk() > 0.5 * space.k_cut() * (1 + 1e-12))
    throw invalid_input("momentum exceeds K_cut / 2 for this window");
}

}  // namespace

TruncatedChiralSpace::TruncatedChiralSpace(int r, double L, int n_modes) : r_(r), L_(L), n_(n_modes) {
  require_sign(r, "r");
  if (!(L > 0)) throw invalid_input("L must be positive");
  if (n_modes < 2 || n_modes > 24 || n_modes % 2 != 0) throw invalid_input("window must have an even 2..24 modes");
  for (int j = 0; j < n_; ++j)
    if (r_ * k(j) < 0) sea_ |= std::uint32_t{1} << j;
}

double TruncatedChiralSpace::dk() const { return 2 * pi / L_; }

double TruncatedChiralSpace::k(int j) const { return dk() * (j - 0.5 * n_ + 0.5); }

double TruncatedChiralSpace::k_cut() const { return dk() * (0.5 * n_ - 0.5); }

int TruncatedChiralSpace::momentum_index(double p) const {
  double u = p / dk();
  double m = std::round(u);
  if (std::abs(u - m) > 1e-9 * std::max(1.0, std::abs(u))) throw invalid_input("momentum off the 2 pi / L lattice");
  return static_cast<int>(m);
}

double TruncatedChiralSpace::excitation_energy(std::uint32_t state) const {
  double e = 0;
  std::uint32_t diff = state ^ sea_;
  for (int j = 0; j < n_; ++j) {
    if (!(diff >> j & 1u)) continue;
    double sign = (state >> j & 1u) ? 1.0 : -1.0;
    e += sign * r_ * k(j);
  }
  return e;
}

int TruncatedChiralSpace::charge(std::uint32_t state) const {
  return std::popcount(state) - std::popcount(sea_);
}

SparseVec DensityOperator::apply(std::uint32_t state) const {
  SparseVec out;
  if (m_ == 0) {
    int q = space_->charge(state);
    if (q != 0) out[state] = q;
    return out;
  }
  const int n = space_->modes();
  for (int j = 0; j < n; ++j) {
    if (!(state >> j & 1u)) continue;
    int t = j - m_;
    if (t < 0 || t >= n || (state >> t & 1u)) continue;
    std::uint32_t mid = state ^ (std::uint32_t{1} << j);
    int parity = popcount_below(state, j) + popcount_below(mid, t);
    out[mid | (std::uint32_t{1} << t)] += (parity % 2) ? -1.0 : 1.0;
  }
  return out;
}

SparseVec DensityOperator::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [s, x] : v) {
    if (x == 0) continue;
    axpy(out, x, apply(s));
  }
  return out;
}

double DensityOperator::element(std::uint32_t out, std::uint32_t in) const {
  SparseVec v = apply(in);
  auto it = v.find(out);
  return it == v.end() ? 0.0 : it->second;
}

DensityOperator build_density(const TruncatedChiralSpace& space, double p) {
  int m = space.momentum_index(p);
  require_half_window(space, m);
  return DensityOperator(space, m);
}

LowSector make_low_sector(const TruncatedChiralSpace& space, double e_low, double inner_fraction) {
  if (!(inner_fraction > 0 && inner_fraction <= 1)) throw invalid_input("inner_fraction must lie in (0, 1]");
  std::vector<int> inner;
  for (int j = 0; j < space.modes(); ++j)
    if (std::abs(space.k(j)) <= inner_fraction * space.k_cut() * (1 + 1e-12)) inner.push_back(j);
  LowSector low{e_low, inner_fraction, {}};
  const std::uint32_t count = std::uint32_t{1} << inner.size();
  for (std::uint32_t sub = 0; sub < count; ++sub) {
    std::uint32_t state = space.sea();
    for (std::size_t i = 0; i < inner.size(); ++i) {
      std::uint32_t bit = std::uint32_t{1} << inner[i];
      state = (sub >> i & 1u) ? (state | bit) : (state & ~bit);
    }
    if (space.excitation_energy(state) <= e_low * (1 + 1e-12)) low.states.push_back(state);
  }
  std::sort(low.states.begin(), low.states.end());
  return low;
}

double check_density_commutator(const TruncatedChiralSpace& space, const LowSector& low, double p, double p_prime) {
  int m = space.momentum_index(p), mp = space.momentum_index(p_prime);
  for (int x : {m, mp, m + mp}) require_half_window(space, x);
  DensityOperator a(space, m), b(space, mp);
  const double central = (m + mp == 0) ? space.r() * m : 0.0;
  auto keep = as_set(low);
  double dev = 0;
  for (std::uint32_t s : low.states) {
    SparseVec v = a.apply(b.apply(s));
    axpy(v, -1.0, b.apply(a.apply(s)));
    v[s] -= central;
    dev = std::max(dev, max_on(v, keep));
  }
  return dev;
}

double check_kronig(const TruncatedChiralSpace& space, const LowSector& low) {
  const double L = space.L();
  const int m_max = static_cast<int>(std::floor(space.k_cut() / space.dk() + 1e-9));
  auto keep = as_set(low);
  double dev = 0;
  for (std::uint32_t s : low.states) {
    SparseVec v;
    v[s] = space.excitation_energy(s);
    int q = space.charge(s);
    v[s] -= pi / L * q * q;
    for (int mag = 1; mag <= m_max; ++mag) {
      int m = space.r() * mag;
      SparseVec w = DensityOperator(space, -m).apply(DensityOperator(space, m).apply(s));
      axpy(v, -2 * pi / L, w);
    }
    dev = std::max(dev, max_on(v, keep));
  }
  return dev / space.dk();
}

double check_boson_ccr(const TruncatedChiralSpace& space, const LowSector& low, double p, double p_prime) {
  if (!(p > 0 && p_prime > 0)) throw invalid_input("boson momenta must be positive");
  int m = space.momentum_index(p), mp = space.momentum_index(p_prime);
  for (int x : {m, mp, m + mp, m - mp}) require_half_window(space, x);
  const int r = space.r();
  const double L = space.L();
  const double sa = std::sqrt(2 * pi / (L * p)), sb = std::sqrt(2 * pi / (L * p_prime));
  DensityOperator b1(space, r * m), b2(space, r * mp), b2dag(space, -r * mp);
  auto keep = as_set(low);
  double dev = 0;
  for (std::uint32_t s : low.states) {
    SparseVec c = b1.apply(b2dag.apply(s));
    axpy(c, -1.0, b2dag.apply(b1.apply(s)));
    for (auto& [k, x] : c) x *= sa * sb;
    if (m == mp) c[s] -= 1.0;
    dev = std::max(dev, max_on(c, keep));

    SparseVec bb = b1.apply(b2.apply(s));
    axpy(bb, -1.0, b2.apply(b1.apply(s)));
    for (auto& [k, x] : bb) x *= sa * sb;
    dev = std::max(dev, max_on(bb, keep));
  }
  SparseVec vac = b1.apply(space.sea());
  for (const auto& [k, x] : vac) dev = std::max(dev, sa * std::abs(x));
  return dev;
}

}  // namespace mattis
