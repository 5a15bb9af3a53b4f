#pragma once

#include "lcc/seq.hpp"

namespace lcc::keycase {

// Parameters of the key case d = (ell,...,ell) * (1,2,...,t): every one
// of t lines carries multiplicity ell.
struct Params {
  Int ell;
  Int t;
  Params(Int ell_, Int t_);  // both must be >= 1
};

// Half-integer bounds are carried doubled so every comparison is exact
// integer arithmetic: a bound of ell*(t-1)/2 is stored as ell*(t-1).
struct DoubledBound {
  Int twice_value;
};

// |{a*b : 1 <= a <= ell} ∩ {1,...,j}| = floor(j/b) for j < b*ell, else ell.
Int chi(Int b, Int j, Int ell);

// Number of entries of d that are <= j, i.e. #{(a,b) : ab <= j}.
Int sigma(Int j, const Params& p);

// phi(j) = sigma(j) - j.  For j >= ell*t this is ell*t - j <= 0.
Int phi(Int j, const Params& p);

// S(d) for the key case: max over 1 <= j <= ell*t of phi(j), floored at
// 0.  Equals seq::s_of(star((ell,...,ell), (1,...,t))).
Int s_keycase(const Params& p);

// The claimed bound on phi: ell*(t-1)/2 when one of ell, t is 2 and the
// other is even; (ell-1)*(t-1)/2 otherwise.
DoubledBound claim_bound(const Params& p);

struct ClaimReport {
  Params params;
  bool holds;     // 2*phi(j) <= twice_value for every 1 <= j <= ell*t
  Int max_phi;    // maximum of phi over that range
  Int witness_j;  // smallest j attaining max_phi
};

// Scans j in [1, ell*t] against claim_bound and additionally checks the
// closed tail formula phi(j) = ell*t - j at j = ell*t, ell*t + 1 and
// 2*ell*t (the tail is non-positive, so it never affects the bound).
ClaimReport verify_claim(const Params& p);

}  // namespace lcc::keycase
