#pragma once

#include <vector>

#include "lcc/keycase.hpp"
#include "lcc/seq.hpp"

namespace lcc::conj {

// ell = 2r (Even) or ell = 2r - 1 (Odd).
enum class Parity { Odd, Even };

Int ell_of(Int r, Parity parity);

// Right-hand side of the initial-degree inequalities in P^n:
// r*alpha_w + r*(n-1) for the even family, r*alpha_w + (r-1)*(n-1) for
// the odd one.
Int conjecture_rhs(Int n, Int r, Int alpha_w, Parity parity);

// BOUND_FAILS only means the sufficient S-criterion failed; it is
// inconclusive for the underlying inequality.
enum class Outcome { BoundHolds, BoundFails };

struct Report {
  NonDecVec c;
  Int t = 0;
  Int r = 0;
  Parity parity = Parity::Odd;
  Int s_value = 0;
  keycase::DoubledBound bound{0};
  Outcome outcome = Outcome::BoundHolds;
  // Smallest 1-based index of v = star((ell,...),c) attaining
  // s_value = i - v_i; 0 when only the floor term 0 attains it.
  Int witness_index = 0;
};

// Checks S(star((ell,...,ell), c)) against (r-1)(t-1) (odd) or r(t-1)
// (even), comparing doubled values.  Holds is guaranteed when c_i >= i
// for every i.
Report verify_lcc_conjecture(const NonDecVec& c, Int r, Parity parity);

struct DominanceResult {
  bool ok;    // S(v) <= S(pi(w))
  Int s_v;
  Int s_pw;
};

// Requires w entrywise <= v (same length).  Lowering entries can only
// raise S, so ok is expected to be true always; the pair of values is
// returned for reporting.
DominanceResult dominance_check(const NonDecVec& v, const IntVec& w);

struct SearchResult {
  Int ell = 0;
  Int t = 0;
  Int cap = 0;
  Parity parity = Parity::Odd;
  std::vector<NonDecVec> failing;          // lexicographic order
  std::vector<NonDecVec> maximal_failing;  // no within-cap cover fails
  Int scanned_count = 0;
};

// Scans every non-decreasing c of length t with entries in [1, cap], in
// lexicographic order.  Maximality is relative to the searched box: a
// failing c is maximal when every valid componentwise successor inside
// the box is non-failing.  The jobs parameter only splits the work;
// results are aggregated in enumeration order and do not depend on it.
SearchResult search_failures(Int ell, Int t, Int cap, Parity parity,
                             int jobs = 1);

}  // namespace lcc::conj
