#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lcc/keycase.hpp"
#include "lcc/seq.hpp"

using namespace lcc;
using keycase::Params;

namespace {

// Independent sigma oracle: count the pairs directly.
Int sigma_brute(Int j, Int ell, Int t) {
  Int count = 0;
  for (Int a = 1; a <= ell; ++a) {
    for (Int b = 1; b <= t; ++b) {
      if (a * b <= j) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("chi") {
  CHECK(keycase::chi(2, 5, 3) == 2);
  CHECK(keycase::chi(2, 6, 3) == 3);   // saturation j >= b*ell
  CHECK(keycase::chi(2, 100, 3) == 3);
  CHECK(keycase::chi(1, 2, 5) == 2);   // b = 1, j < ell
  CHECK_THROWS_AS(keycase::chi(0, 1, 1), std::invalid_argument);
}

TEST_CASE("sigma examples and brute force") {
  CHECK(keycase::sigma(4, Params(2, 3)) == 5);
  CHECK(keycase::sigma(6, Params(2, 3)) == 6);   // j = ell*t
  CHECK(keycase::sigma(1, Params(7, 9)) == 1);   // only the pair (1,1)
  for (Int ell = 1; ell <= 12; ++ell) {
    for (Int t = 1; t <= 12; ++t) {
      Params p(ell, t);
      for (Int j = 1; j <= ell * t; ++j) {
        REQUIRE(keycase::sigma(j, p) == sigma_brute(j, ell, t));
      }
    }
  }
}

TEST_CASE("phi examples") {
  CHECK(keycase::phi(3, Params(3, 3)) == 2);
  CHECK(keycase::phi(5, Params(4, 3)) == 2);
  // Past ell*t everything saturates.
  for (Int j : {12L, 13L, 30L}) {
    CHECK(keycase::phi(j, Params(4, 3)) == 12 - j);
  }
}

TEST_CASE("s_keycase") {
  CHECK(keycase::s_keycase(Params(2, 4)) == 2);
  CHECK(keycase::s_keycase(Params(3, 3)) == 2);
  for (Int t = 1; t <= 8; ++t) CHECK(keycase::s_keycase(Params(1, t)) == 0);
}

TEST_CASE("s_keycase equals s_of(star) on the 12x12 grid") {
  for (Int ell = 1; ell <= 12; ++ell) {
    for (Int t = 1; t <= 12; ++t) {
      IntVec a(static_cast<std::size_t>(t), ell);
      IntVec m(static_cast<std::size_t>(t));
      for (Int i = 0; i < t; ++i) m[i] = i + 1;
      REQUIRE(keycase::s_keycase(Params(ell, t)) ==
              seq::s_of(seq::star(a, m)));
    }
  }
}

TEST_CASE("claim_bound picks the parity case") {
  CHECK(keycase::claim_bound(Params(2, 4)).twice_value == 6);
  CHECK(keycase::claim_bound(Params(3, 3)).twice_value == 4);
  CHECK(keycase::claim_bound(Params(2, 3)).twice_value == 2);
  CHECK(keycase::claim_bound(Params(2, 2)).twice_value == 2);
  CHECK(keycase::claim_bound(Params(4, 2)).twice_value == 4);
  CHECK(keycase::claim_bound(Params(3, 2)).twice_value == 2);
  CHECK(keycase::claim_bound(Params(1, 1)).twice_value == 0);
}

TEST_CASE("verify_claim") {
  auto rep = keycase::verify_claim(Params(2, 4));
  CHECK(rep.holds);
  CHECK(rep.max_phi == 2);
  CHECK(keycase::phi(rep.witness_j, Params(2, 4)) == 2);

  auto triv = keycase::verify_claim(Params(1, 1));
  CHECK(triv.holds);
  CHECK(triv.max_phi == 0);
  CHECK(triv.witness_j == 1);

  CHECK(keycase::verify_claim(Params(50, 50)).holds);
}

TEST_CASE("the weaker parity bound is genuinely needed at (2,4)") {
  auto rep = keycase::verify_claim(Params(2, 4));
  // max phi = 2 exceeds (ell-1)(t-1)/2 = 3/2 but not ell(t-1)/2 = 3.
  CHECK(2 * rep.max_phi > (2 - 1) * (4 - 1));
  CHECK(2 * rep.max_phi <= 2 * (4 - 1));
}

TEST_CASE("floor bounds used by the middle-j argument") {
  // Both hinge on floor(b/k) <= floor(b/2), so k >= 2 (the k = 1 case
  // is handled separately in the proof and the bounds are false there:
  // k = 1, j = ell + 1 gives floor((a+k)/2k) = 1 > a/2).
  for (Int k = 2; k <= 20; ++k) {
    for (Int ell = 3; ell <= 20; ++ell) {
      for (Int j = k * ell + 1; j <= (k + 1) * ell; ++j) {
        const Int a = j - k * ell;
        // floor(a/(2k)) <= a/2 - 1/2, doubled
        REQUIRE(2 * ((a) / (2 * k)) <= a - 1);
        // floor((a+k)/(2k)) <= a/2, doubled
        REQUIRE(2 * ((a + k) / (2 * k)) <= a);
      }
    }
  }
}
