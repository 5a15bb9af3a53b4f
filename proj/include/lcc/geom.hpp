#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcc/seq.hpp"

namespace lcc::geom {

using Rat = mpq_class;

// Homogeneous coordinate triple over Q, stored canonically: denominators
// cleared, entries divided by their gcd, first nonzero entry positive.
// Two triples are projectively equal iff their canonical forms match.
class HomTriple {
 public:
  HomTriple(const Rat& a, const Rat& b, const Rat& c);
  static HomTriple of_ints(Int a, Int b, Int c);

  const mpz_class& operator[](int i) const { return z_[i]; }

  static int compare(const HomTriple& a, const HomTriple& b);
  friend bool operator==(const HomTriple& a, const HomTriple& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const HomTriple& a, const HomTriple& b) {
    return compare(a, b) < 0;
  }

  std::string str() const;  // "a:b:c"

 private:
  HomTriple() = default;
  mpz_class z_[3];
};

class ProjPoint {
 public:
  explicit ProjPoint(HomTriple coords) : c_(std::move(coords)) {}
  ProjPoint(const Rat& x0, const Rat& x1, const Rat& x2)
      : c_(x0, x1, x2) {}
  const HomTriple& coords() const { return c_; }
  std::string str() const { return c_.str(); }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.c_ < b.c_;
  }

 private:
  HomTriple c_;
};

class ProjLine {
 public:
  explicit ProjLine(HomTriple coeffs) : c_(std::move(coeffs)) {}
  ProjLine(const Rat& a0, const Rat& a1, const Rat& a2)
      : c_(a0, a1, a2) {}
  const HomTriple& coeffs() const { return c_; }
  std::string str() const { return c_.str(); }
  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const ProjLine& a, const ProjLine& b) {
    return a.c_ < b.c_;
  }

 private:
  HomTriple c_;
};

// Exact incidence: a0*x0 + a1*x1 + a2*x2 == 0.
bool incident(const ProjPoint& p, const ProjLine& l);
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// Fat point scheme m_1 P_1 + ... + m_q P_q.  Points are pairwise
// distinct and kept sorted in canonical coordinate order; entries with
// multiplicity 0 are dropped, so equality is order-insensitive.
class FatPointScheme {
 public:
  using Item = std::pair<ProjPoint, Int>;

  FatPointScheme() = default;
  // Throws on negative multiplicities and on duplicate points.
  explicit FatPointScheme(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t point_count() const { return items_.size(); }

  std::vector<ProjPoint> support() const;
  Int multiplicity_of(const ProjPoint& p) const;  // 0 if absent
  // deg(Y) = sum of m_i*(m_i+1)/2, the number of conditions Y imposes.
  Int degree() const;
  Int total_multiplicity() const;

  friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;

 private:
  std::vector<Item> items_;
};

// Y : L  — multiplicities of points on L drop by one (never below 0).
FatPointScheme residual(const FatPointScheme& y, const ProjLine& l);

// Sum of multiplicities of the support points lying on L.
Int line_weight(const FatPointScheme& y, const ProjLine& l);

// Record of a residuation run.  Lines are given in application order;
// the induced reduction vector d keeps the reversed convention in which
// the first line applied is recorded last, so d is non-decreasing for
// the schedules produced by schedule_star.  steps[k] is Y_k: steps
// holds Y_0,...,Y_n with Y_n the input scheme and Y_{k-1} = Y_k : L_k,
// where L_k = lines_applied[n-k].
struct ReductionTrace {
  std::vector<ProjLine> lines_applied;
  IntVec d;
  std::vector<FatPointScheme> steps;
  bool totally_reduced = false;
};

ReductionTrace reduce_by_sequence(const FatPointScheme& y,
                                  const std::vector<ProjLine>& lines);

// A realized line count configuration: groups[i] holds type.at1(i+1)
// distinct points on lines[i], none of them at an intersection of two
// configuration lines.  mults[i] is the multiplicity a_i given to every
// point of group i.
struct GeometricLCC {
  std::vector<ProjLine> lines;
  std::vector<std::vector<ProjPoint>> groups;
  NonDecVec type;
  IntVec mults;

  // The fat point scheme T(a,c).
  FatPointScheme scheme() const;
  // Throws std::logic_error if any invariant fails.
  void validate() const;
};

// Deterministic rational realization of a line count configuration of
// type c with multiplicities a.  Coordinates are drawn from a seeded
// mt19937_64 as integers in [-1000, 1000] (value = gen() % 2001 - 1000);
// rejection sampling enforces distinctness and intersection avoidance
// with a total retry budget of 10,000 draws.
GeometricLCC build_lcc(const NonDecVec& c, const IntVec& a,
                       std::uint64_t seed);

// Thrown when no application order realizes star(a, c); carries the
// vector the greedy schedule achieved.
class ScheduleError : public std::runtime_error {
 public:
  ScheduleError(std::string msg, IntVec achieved)
      : std::runtime_error(std::move(msg)), achieved(std::move(achieved)) {}
  IntVec achieved;
};

// Totally reduces T(a,c), using each line L_i exactly a_i times, so that
// the recorded reduction vector equals star(a, c).  Greedy: apply the
// line of maximum current weight, ties to the smallest line index.  If
// the greedy vector misses (not expected for a valid configuration), an
// exhaustive search over application orders runs when the total number
// of applications is <= 10; otherwise ScheduleError.
ReductionTrace schedule_star(const GeometricLCC& t);

// Lower bound f_d for the Hilbert function of any scheme with a totally
// reducing sequence of reduction vector d.
inline DegreeSeq hilbert_lower_bound(const NonDecVec& d) {
  return seq::f_of(d);
}

// alpha(diag(d)), a lower bound for alpha of any such scheme.
inline Int alpha_lower_bound(const NonDecVec& d) {
  return seq::alpha_diag_closed(d);
}

}  // namespace lcc::geom
