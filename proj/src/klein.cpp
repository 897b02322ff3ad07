#include "mattis/klein.hpp"

#include <unordered_map>

#include "mattis/params.hpp"

namespace mattis {

bool klein_pairs(const KleinLabel& a, const KleinLabel& b) {
  return a.q == -b.q && a.r == b.r && a.s == b.s && a.x == b.x;
}

namespace {

struct Pfaffian {
  const std::vector<KleinLabel>& seq;
  std::unordered_map<std::uint64_t, int> memo;

  int eval(std::uint64_t mask) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctzll(mask);
    std::uint64_t rest = mask & (mask - 1);
    int value = 0;
    int sign = 1;
    for (std::uint64_t m = rest; m; m &= m - 1) {
      int j = __builtin_ctzll(m);
      if (klein_pairs(seq[first], seq[j])) value += sign * eval(rest & ~(std::uint64_t{1} << j));
      sign = -sign;
    }
    memo.emplace(mask, value);
    return value;
  }
};

}  // namespace

int klein_vev(const std::vector<KleinLabel>& seq) {
  for (const auto& k : seq) {
    require_sign(k.q, "q");
    require_sign(k.r, "r");
    require_sign(k.s, "s");
  }
  if (seq.size() % 2 == 1) return 0;
  if (seq.size() > 64) throw invalid_input("klein_vev supports at most 64 factors");
  if (seq.empty()) return 1;
  std::uint64_t all = seq.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << seq.size()) - 1;
  Pfaffian pf{seq, {}};
  return pf.eval(all);
}

}  // namespace mattis
