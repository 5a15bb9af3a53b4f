#include "lcc/keycase.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcc::keycase {

Params::Params(Int ell_, Int t_) : ell(ell_), t(t_) {
  if (ell < 1 || t < 1) {
    throw std::invalid_argument("Params: ell and t must be >= 1");
  }
}

Int chi(Int b, Int j, Int ell) {
  if (b < 1 || j < 1 || ell < 1) {
    throw std::invalid_argument("chi: arguments must be >= 1");
  }
  return j < b * ell ? j / b : ell;
}

Int sigma(Int j, const Params& p) {
  if (j < 1) throw std::invalid_argument("sigma: j must be >= 1");
  Int total = 0;
  for (Int b = 1; b <= p.t; ++b) total += chi(b, j, p.ell);
  return total;
}

Int phi(Int j, const Params& p) { return sigma(j, p) - j; }

Int s_keycase(const Params& p) {
  Int best = 0;
  for (Int j = 1; j <= p.ell * p.t; ++j) best = std::max(best, phi(j, p));
  return best;
}

DoubledBound claim_bound(const Params& p) {
  const bool parity_case = (p.t == 2 && p.ell % 2 == 0) ||
                           (p.ell == 2 && p.t % 2 == 0);
  if (parity_case) return {p.ell * (p.t - 1)};
  return {(p.ell - 1) * (p.t - 1)};
}

ClaimReport verify_claim(const Params& p) {
  const DoubledBound bound = claim_bound(p);
  const Int n = p.ell * p.t;
  Int max_phi = phi(1, p);
  Int witness = 1;
  bool holds = true;
  for (Int j = 1; j <= n; ++j) {
    Int v = phi(j, p);
    if (v > max_phi) {
      max_phi = v;
      witness = j;
    }
    if (2 * v > bound.twice_value) holds = false;
  }
  // Tail j > n is covered by the saturation of every chi at ell.
  for (Int j : {n, n + 1, 2 * n}) {
    if (phi(j, p) != n - j) holds = false;
  }
  return {p, holds, max_phi, witness};
}

}  // namespace lcc::keycase
