#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lcc/geom.hpp"
#include "lcc/seq.hpp"

namespace lcc::oracle {

// n*(n-1)/2; dim R_t is choose2(t+2) and a point of multiplicity m
// imposes choose2(m+1) conditions.
inline Int choose2(Int n) { return n * (n - 1) / 2; }

struct ExpTriple {
  Int e0, e1, e2;
  friend bool operator==(const ExpTriple&, const ExpTriple&) = default;
};

// All exponent triples of total degree t, in graded-lex order
// (descending lexicographic on (e0, e1, e2)).  Size choose2(t+2).
std::vector<ExpTriple> monomial_basis(Int t);

// Vanishing-conditions matrix in degree t.  One row per pair (point,
// derivative multi-index beta); for each point the two differentiation
// variables are the coordinates other than its first nonzero one, and
// beta runs over |beta| <= m-1, giving choose2(m+1) rows per point.
// Columns follow monomial_basis(t).  The cell for (beta, gamma) is
// (gamma!/(gamma-beta)!) * P^(gamma-beta) when gamma >= beta
// componentwise and 0 otherwise; entries are exact integers.  The
// kernel is the degree-t part of the defining ideal, so H(Y,t) is the
// rank.
class CondMatrix {
 public:
  CondMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> a_;
};

CondMatrix condition_matrix(const geom::FatPointScheme& y, Int t);

// Rank over Q by fraction-free (Bareiss) elimination.  Authoritative.
Int rank_rational(const CondMatrix& m);

// Rank of the reduction mod p (p an odd prime below 2^31).
Int rank_mod(const CondMatrix& m, std::uint32_t p);

// Two-prime certification: ranks mod both primes must agree, otherwise
// the rational rank decides.  Modular ranks never exceed the rational
// rank, so agreement of two independent primes is accepted.
inline constexpr std::uint32_t kPrimeA = 2147483647u;  // 2^31 - 1
inline constexpr std::uint32_t kPrimeB = 2147483629u;  // largest prime below

enum class RankMode { Rational, Modular };

struct RankOutcome {
  Int rank;
  bool fell_back;  // primes disagreed and the rational path was used
};

RankOutcome rank_exact(const CondMatrix& m, RankMode mode = RankMode::Modular);

enum class Method { RationalExact, ModularCertified };
std::string method_name(Method m);

struct HilbertResult {
  DegreeSeq values;            // H(Y, t) for t = 0..t_eff, constant tail
  Int alpha = 0;               // least t with H(Y,t) < choose2(t+2)
  Method method = Method::RationalExact;
  std::vector<Int> primes_used;  // empty for the rational path
};

// Hilbert function by exact rank for 0 <= t <= max(t_max, sum of
// multiplicities); the raise guarantees the constant tail deg(Y) has
// been reached, never extrapolated.
HilbertResult hilbert_exact(const geom::FatPointScheme& y, Int t_max,
                            RankMode mode = RankMode::Modular);

// Least t with H(Y,t) < choose2(t+2).  0 for the empty scheme (by
// convention; there is a nonzero constant "form" cutting nothing).
Int alpha_exact(const geom::FatPointScheme& y,
                RankMode mode = RankMode::Modular);

// For reduced B (all multiplicities 1), returns A ⊆ B with
// alpha(A) = alpha(B) =: a, |A| = choose2(a+1) and first difference
// Hilbert function (1, 2, ..., a, 0, ...).  Greedy in canonical point
// order: a point joins A when its evaluation row is independent of A's
// rows in degree a-1.  Rank arithmetic is rational throughout.
geom::FatPointScheme extract_generic_subset(const geom::FatPointScheme& b);

}  // namespace lcc::oracle
