#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace lcc {

using Int = long;  // 64-bit here; GMP interops with long directly
using IntVec = std::vector<Int>;

// Integer vector with non-decreasing entries.  Mirrors the 1-based
// indexing v_1..v_m used for type vectors c and reduction vectors d;
// at1(i) is v_i.
class NonDecVec {
 public:
  NonDecVec() = default;
  // Throws std::invalid_argument unless v is non-decreasing.
  explicit NonDecVec(IntVec v);
  // Sorts v into non-decreasing order first (the permuting operator).
  static NonDecVec sorted(IntVec v);

  const IntVec& vec() const { return v_; }
  Int at1(std::size_t i) const { return v_.at(i - 1); }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const NonDecVec&, const NonDecVec&) = default;
  friend auto operator<=>(const NonDecVec&, const NonDecVec&) = default;

 private:
  IntVec v_;
};

// Integer sequence indexed by degree t >= 0: an explicit finite prefix
// plus a tail rule.  A Zero tail continues with zeros, a Constant tail
// repeats the last prefix entry forever.  at(t) is defined for every
// t >= 0, so two sequences compare equal exactly when they agree
// pointwise, independent of how long their prefixes happen to be.
class DegreeSeq {
 public:
  enum class Tail { Zero, Constant };

  DegreeSeq() : tail_(Tail::Zero) {}
  // Prefix entries must be >= 0; a Constant tail needs a nonempty prefix.
  DegreeSeq(IntVec prefix, Tail tail);

  Int at(Int t) const;
  const IntVec& prefix() const { return prefix_; }
  Tail tail() const { return tail_; }
  // Value the sequence eventually stays at.
  Int eventual() const;

  friend bool operator==(const DegreeSeq& a, const DegreeSeq& b);

 private:
  IntVec prefix_;
  Tail tail_;
};

struct LatticePoint {
  Int x;
  Int y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

namespace seq {

// Permuting operator: entries of v in non-decreasing order.
NonDecVec pi(const IntVec& v);

// a o m = (1m_1,...,a_1 m_1, 1m_2,...,a_2 m_2, ...).  Requires equal
// lengths and strictly positive entries on both sides.
IntVec circ(const IntVec& a, const IntVec& m);

// a * m = pi(a o m).
NonDecVec star(const IntVec& a, const IntVec& m);

// First differences (v_1, v_2-v_1, ..., v_m-v_{m-1}).  Entries may be
// negative when v is not non-decreasing.
IntVec delta(const IntVec& v);

// Generalized monotone sequence: between any two zero entries of
// delta(v) there is an entry strictly greater than 1.
bool is_gms(const NonDecVec& v);

// Standard configuration C_v: the v_{m-j} leftmost first-quadrant
// lattice points on each horizontal line y = j, 0 <= j < m.
std::vector<LatticePoint> standard_config(const IntVec& v);

// Anti-diagonal counts of C_v, as a sequence with an all-zero tail.
DegreeSeq diag(const IntVec& v);

// Least t >= 0 with w_t < t + 1.  Always exists for both tail rules.
Int alpha_of(const DegreeSeq& w);

// Closed form for alpha_of(diag(d)) with d = (d_1,...,d_s) non-
// decreasing: s + min(0, d_1-1, d_2-2, ..., d_s-s).
Int alpha_diag_closed(const NonDecVec& d);

// Running sums of diag(d); tail is constant at sum(d).
DegreeSeq f_of(const NonDecVec& d);

// S(v) = max(0, 1-v_1, 2-v_2, ..., m-v_m).  alpha_diag_closed(v) equals
// v.size() - s_of(v).
Int s_of(const NonDecVec& v);

}  // namespace seq
}  // namespace lcc
