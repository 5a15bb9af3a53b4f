#include "lcc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcc::oracle {

std::vector<ExpTriple> monomial_basis(Int t) {
  if (t < 0) throw std::invalid_argument("monomial_basis: t must be >= 0");
  std::vector<ExpTriple> out;
  out.reserve(static_cast<std::size_t>(choose2(t + 2)));
  for (Int e0 = t; e0 >= 0; --e0) {
    for (Int e1 = t - e0; e1 >= 0; --e1) {
      out.push_back({e0, e1, t - e0 - e1});
    }
  }
  return out;
}

namespace {

// gamma_i * (gamma_i - 1) * ... * (gamma_i - beta_i + 1)
mpz_class falling(Int gamma, Int beta) {
  mpz_class f = 1;
  for (Int k = 0; k < beta; ++k) f *= (gamma - k);
  return f;
}

struct DerivDirs {
  int u, v;  // the two differentiation coordinates
};

// Differentiate in the coordinates other than the first nonzero one of
// the (canonical) point; that coordinate plays the role of the affine
// chart denominator.
DerivDirs dirs_for(const geom::ProjPoint& p) {
  for (int i = 0; i < 3; ++i) {
    if (p.coords()[i] != 0) {
      return {i == 0 ? 1 : 0, i == 2 ? 1 : 2};
    }
  }
  throw std::logic_error("zero point");
}

}  // namespace

CondMatrix condition_matrix(const geom::FatPointScheme& y, Int t) {
  if (t < 0) throw std::invalid_argument("condition_matrix: t must be >= 0");
  const auto mons = monomial_basis(t);
  std::size_t rows = 0;
  for (const auto& [p, m] : y.items()) {
    rows += static_cast<std::size_t>(choose2(m + 1));
  }
  CondMatrix out(rows, mons.size());

  std::size_t r = 0;
  for (const auto& [p, m] : y.items()) {
    const auto [u, v] = dirs_for(p);
    // Power tables for the three coordinates, exponents 0..t.
    mpz_class pow_tab[3][64];
    if (t >= 64) throw std::invalid_argument("condition_matrix: degree too large");
    for (int i = 0; i < 3; ++i) {
      pow_tab[i][0] = 1;
      for (Int e = 1; e <= t; ++e) pow_tab[i][e] = pow_tab[i][e - 1] * p.coords()[i];
    }
    // beta over the two directions, by total order then lex.
    for (Int total = 0; total <= m - 1; ++total) {
      for (Int bu = total; bu >= 0; --bu) {
        const Int bv = total - bu;
        Int beta[3] = {0, 0, 0};
        beta[u] = bu;
        beta[v] = bv;
        for (std::size_t c = 0; c < mons.size(); ++c) {
          const Int g[3] = {mons[c].e0, mons[c].e1, mons[c].e2};
          if (g[0] < beta[0] || g[1] < beta[1] || g[2] < beta[2]) continue;
          mpz_class cell = falling(g[u], beta[u]) * falling(g[v], beta[v]);
          for (int i = 0; i < 3; ++i) cell *= pow_tab[i][g[i] - beta[i]];
          out.at(r, c) = cell;
        }
        ++r;
      }
    }
  }
  return out;
}

Int rank_rational(const CondMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<mpz_class> a(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) a[i * nc + j] = m.at(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& {
    return a[i * nc + j];
  };

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = rank; i < nr; ++i) {
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == nr) continue;
    if (piv != rank) {
      for (std::size_t j = col; j < nc; ++j) std::swap(at(piv, j), at(rank, j));
    }
    // One Bareiss step; the division by the previous pivot is exact.
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        mpz_class num = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return static_cast<Int>(rank);
}

Int rank_mod(const CondMatrix& m, std::uint32_t p) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::uint64_t> a(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      a[i * nc + j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
    }
  }
  const std::uint64_t mod = p;
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return a[i * nc + j];
  };
  auto pow_mod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = r * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return r;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = rank; i < nr; ++i) {
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == nr) continue;
    if (piv != rank) {
      for (std::size_t j = col; j < nc; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const std::uint64_t inv = pow_mod(at(rank, col), mod - 2);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      if (at(i, col) == 0) continue;
      const std::uint64_t f = at(i, col) * inv % mod;
      for (std::size_t j = col; j < nc; ++j) {
        at(i, j) = (at(i, j) + (mod - f) * at(rank, j)) % mod;
      }
    }
    ++rank;
  }
  return static_cast<Int>(rank);
}

RankOutcome rank_exact(const CondMatrix& m, RankMode mode) {
  if (mode == RankMode::Rational) return {rank_rational(m), false};
  Int r1 = rank_mod(m, kPrimeA);
  Int r2 = rank_mod(m, kPrimeB);
  if (r1 == r2) return {r1, false};
  return {rank_rational(m), true};
}

std::string method_name(Method m) {
  return m == Method::RationalExact ? "rational-exact" : "modular-certified";
}

HilbertResult hilbert_exact(const geom::FatPointScheme& y, Int t_max,
                            RankMode mode) {
  if (t_max < 0) t_max = 0;
  const Int t_eff = std::max(t_max, y.total_multiplicity());
  IntVec values;
  values.reserve(static_cast<std::size_t>(t_eff) + 1);
  for (Int t = 0; t <= t_eff; ++t) {
    values.push_back(rank_exact(condition_matrix(y, t), mode).rank);
  }
  if (values.back() != y.degree()) {
    throw std::logic_error("hilbert_exact: tail did not reach deg(Y)");
  }
  HilbertResult out;
  out.values = DegreeSeq(std::move(values), DegreeSeq::Tail::Constant);
  out.alpha = 0;
  while (out.values.at(out.alpha) >= choose2(out.alpha + 2)) ++out.alpha;
  out.method = mode == RankMode::Rational ? Method::RationalExact
                                          : Method::ModularCertified;
  if (mode == RankMode::Modular) {
    out.primes_used = {static_cast<Int>(kPrimeA), static_cast<Int>(kPrimeB)};
  }
  return out;
}

Int alpha_exact(const geom::FatPointScheme& y, RankMode mode) {
  const Int cap = y.total_multiplicity();  // alpha <= sum m_i always
  for (Int t = 0; t <= cap; ++t) {
    if (rank_exact(condition_matrix(y, t), mode).rank < choose2(t + 2)) {
      return t;
    }
  }
  throw std::logic_error("alpha_exact: no deficit up to sum of multiplicities");
}

geom::FatPointScheme extract_generic_subset(const geom::FatPointScheme& b) {
  if (b.empty()) {
    throw std::invalid_argument("extract_generic_subset: empty scheme");
  }
  for (const auto& [p, m] : b.items()) {
    if (m != 1) {
      throw std::invalid_argument(
          "extract_generic_subset: scheme must be reduced (all "
          "multiplicities 1)");
    }
  }
  const Int alpha = alpha_exact(b, RankMode::Rational);
  const Int target = choose2(alpha + 1);
  const Int s = alpha - 1;  // independence degree

  std::vector<geom::FatPointScheme::Item> picked;
  Int rank_cur = 0;
  for (const auto& [p, m] : b.items()) {
    if (static_cast<Int>(picked.size()) == target) break;
    auto cand = picked;
    cand.emplace_back(p, 1);
    geom::FatPointScheme cs(cand);
    Int r = rank_rational(condition_matrix(cs, s));
    if (r > rank_cur) {
      picked = std::move(cand);
      rank_cur = r;
    }
  }
  if (static_cast<Int>(picked.size()) != target) {
    throw std::logic_error("extract_generic_subset: selection fell short");
  }
  return geom::FatPointScheme(std::move(picked));
}

}  // namespace lcc::oracle
