#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mattis {

// Sparse Fock vector over occupation bitstrings (bit j = mode j).
using SparseVec = std::unordered_map<std::uint32_t, double>;

// One chiral 1D chain truncated to n modes k_j = (2 pi / L)(j - n/2 + 1/2), j = 0..n-1.
class TruncatedChiralSpace {
 public:
  TruncatedChiralSpace(int r, double L, int n_modes);

  int r() const { return r_; }
  double L() const { return L_; }
  int modes() const { return n_; }
  double dk() const;
  double k(int j) const;
  double k_cut() const;
  std::uint32_t sea() const { return sea_; }
  // p = (2 pi / L) m; throws invalid_input off the lattice.
  int momentum_index(double p) const;
  // sum_j r k_j (n_j - n_j^sea)
  double excitation_energy(std::uint32_t state) const;
  // sum_j (n_j - n_j^sea)
  int charge(std::uint32_t state) const;

 private:
  int r_;
  double L_;
  int n_;
  std::uint32_t sea_ = 0;
};

// Normal-ordered density j(p) = sum_k :c^+(k - p) c(k): restricted to the window.
class DensityOperator {
 public:
  DensityOperator(const TruncatedChiralSpace& space, int m) : space_(&space), m_(m) {}
  int m() const { return m_; }
  SparseVec apply(const SparseVec& v) const;
  SparseVec apply(std::uint32_t state) const;
  double element(std::uint32_t out, std::uint32_t in) const;

 private:
  const TruncatedChiralSpace* space_;
  int m_;
};

// Requires |p| <= K_cut / 2.
DensityOperator build_density(const TruncatedChiralSpace& space, double p);

// Basis states that agree with the sea outside |k| <= inner_fraction * K_cut and have
// excitation energy <= e_low.
struct LowSector {
  double e_low;
  double inner_fraction;
  std::vector<std::uint32_t> states;
};

LowSector make_low_sector(const TruncatedChiralSpace& space, double e_low, double inner_fraction = 0.5);

// Max |<a| [j(p), j(p')] - r (L p / 2 pi) delta_{p+p',0} |b>| over a, b in the sector.
double check_density_commutator(const TruncatedChiralSpace& space, const LowSector& low, double p, double p_prime);

// Max |<a| H0 - (pi/L)(2 sum_{rp>0, |p|<=K_cut} j(-p) j(p) + j(0)^2) |b>| over the sector, in units of 2 pi / L.
double check_kronig(const TruncatedChiralSpace& space, const LowSector& low);

// b(p) = sqrt(2 pi / (L p)) j(r p) for p > 0. Max deviation of [b(p), b^+(p')] = delta,
// [b(p), b(p')] = 0 and b(p) sea = 0.
double check_boson_ccr(const TruncatedChiralSpace& space, const LowSector& low, double p, double p_prime);

}  // namespace mattis
