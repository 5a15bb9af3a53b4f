#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lcc/geom.hpp"
#include "lcc/oracle.hpp"
#include "lcc/seq.hpp"

using namespace lcc;
using namespace lcc::oracle;
using fixtures::pt;
using fixtures::rand_int;
using geom::FatPointScheme;

namespace {

// Symbolic differentiation oracle for a monomial x^g: repeated
// single-variable derivatives, then evaluation.
mpz_class diff_eval(const Int g_in[3], const Int beta[3],
                    const geom::ProjPoint& p) {
  Int g[3] = {g_in[0], g_in[1], g_in[2]};
  mpz_class coeff = 1;
  for (int var = 0; var < 3; ++var) {
    for (Int k = 0; k < beta[var]; ++k) {
      coeff *= g[var];
      g[var] -= 1;
    }
  }
  if (coeff == 0) return 0;
  for (int var = 0; var < 3; ++var) {
    for (Int e = 0; e < g[var]; ++e) coeff *= p.coords()[var];
  }
  return coeff;
}

FatPointScheme single_point(Int mult) {
  return FatPointScheme({{pt(1, 0, 0), mult}});
}

}  // namespace

TEST_CASE("monomial_basis sizes and order") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(2).size() == 6);
  CHECK(monomial_basis(5).size() == 21);
  auto b = monomial_basis(2);
  CHECK(b.front() == ExpTriple{2, 0, 0});
  CHECK(b[1] == ExpTriple{1, 1, 0});
  CHECK(b.back() == ExpTriple{0, 0, 2});
  for (const auto& e : b) CHECK(e.e0 + e.e1 + e.e2 == 2);
}

TEST_CASE("condition_matrix shapes") {
  CHECK(condition_matrix(single_point(2), 1).rows() == 3);
  CHECK(condition_matrix(single_point(2), 1).cols() == 3);
  CHECK(condition_matrix(single_point(1), 4).rows() == 1);
  CHECK(condition_matrix(FatPointScheme({{pt(1, 0, 0), 0}}), 3).rows() == 0);

  auto s = fixtures::three_line_scheme();
  CHECK(condition_matrix(s.scheme, 5).rows() == 17);  // deg(Y)
  CHECK(condition_matrix(s.scheme, 5).cols() == 21);
}

TEST_CASE("condition_matrix cells match symbolic differentiation") {
  std::mt19937_64 gen(21);
  for (int iter = 0; iter < 60; ++iter) {
    Int a = rand_int(gen, -9, 9), b = rand_int(gen, -9, 9),
        c = rand_int(gen, -9, 9);
    if (a == 0 && b == 0 && c == 0) continue;
    geom::ProjPoint p = pt(a, b, c);
    Int mult = rand_int(gen, 1, 4);
    Int t = rand_int(gen, 0, 4);
    FatPointScheme y({{p, mult}});
    CondMatrix m = condition_matrix(y, t);
    auto mons = monomial_basis(t);

    // Reconstruct the row order: derivatives run over the two
    // coordinates other than the first nonzero one, by total order
    // then descending first component.
    int pivot = 0;
    while (p.coords()[pivot] == 0) ++pivot;
    int u = pivot == 0 ? 1 : 0;
    int v = pivot == 2 ? 1 : 2;

    std::size_t r = 0;
    for (Int total = 0; total <= mult - 1; ++total) {
      for (Int bu = total; bu >= 0; --bu) {
        Int beta[3] = {0, 0, 0};
        beta[u] = bu;
        beta[v] = total - bu;
        for (std::size_t col = 0; col < mons.size(); ++col) {
          Int g[3] = {mons[col].e0, mons[col].e1, mons[col].e2};
          REQUIRE(m.at(r, col) == diff_eval(g, beta, p));
        }
        ++r;
      }
    }
    REQUIRE(r == m.rows());
  }
}

TEST_CASE("rank on degenerate matrices") {
  CondMatrix zero(3, 4);
  CHECK(rank_rational(zero) == 0);
  CHECK(rank_mod(zero, kPrimeA) == 0);

  CondMatrix eye(4, 4);
  for (int i = 0; i < 4; ++i) eye.at(i, i) = i + 1;
  CHECK(rank_rational(eye) == 4);
  CHECK(rank_mod(eye, kPrimeA) == 4);
  CHECK(rank_exact(eye).rank == 4);
}

TEST_CASE("modular rank never exceeds rational rank") {
  std::mt19937_64 gen(22);
  for (int iter = 0; iter < 30; ++iter) {
    FatPointScheme y = fixtures::random_simple_points(gen, rand_int(gen, 1, 6), 20);
    Int t = rand_int(gen, 0, 4);
    CondMatrix m = condition_matrix(y, t);
    Int rq = rank_rational(m);
    CHECK(rank_mod(m, kPrimeA) <= rq);
    CHECK(rank_mod(m, kPrimeB) <= rq);
    CHECK(rank_exact(m, RankMode::Modular).rank == rq);
  }
}

TEST_CASE("certification primes are prime") {
  for (std::uint64_t p : {kPrimeA, kPrimeB}) {
    for (std::uint64_t q = 2; q * q <= p; ++q) REQUIRE(p % q != 0);
  }
  CHECK(kPrimeA != kPrimeB);
}

TEST_CASE("hilbert of a single fat point") {
  HilbertResult h = hilbert_exact(single_point(3), 0);
  CHECK(h.values == DegreeSeq({1, 3, 6, 6}, DegreeSeq::Tail::Constant));
  CHECK(h.alpha == 3);

  for (Int m = 1; m <= 6; ++m) {
    HilbertResult hm = hilbert_exact(single_point(m), m + 1);
    for (Int t = 0; t <= m + 1; ++t) {
      CHECK(hm.values.at(t) == std::min(choose2(t + 2), choose2(m + 1)));
    }
    CHECK(hm.alpha == m);
  }
}

TEST_CASE("hilbert of the three-line scheme matches f_d exactly") {
  auto s = fixtures::three_line_scheme();
  DegreeSeq f = seq::f_of(NonDecVec({2, 3, 4, 8}));

  HilbertResult modular = hilbert_exact(s.scheme, 0, RankMode::Modular);
  HilbertResult rational = hilbert_exact(s.scheme, 0, RankMode::Rational);
  CHECK(modular.values == f);
  CHECK(rational.values == f);
  CHECK(modular.alpha == 4);
  CHECK(rational.alpha == 4);
  CHECK(rational.primes_used.empty());
  CHECK(modular.primes_used.size() == 2);
  CHECK(method_name(modular.method) == "modular-certified");
  CHECK(method_name(rational.method) == "rational-exact");

  CHECK(rank_rational(condition_matrix(s.scheme, 5)) == 15);
}

TEST_CASE("generic simple points have the truncated Hilbert function") {
  std::mt19937_64 gen(23);
  FatPointScheme five = fixtures::random_simple_points(gen, 5);
  HilbertResult h = hilbert_exact(five, 5);
  CHECK(h.values == DegreeSeq({1, 3, 5, 5}, DegreeSeq::Tail::Constant));

  for (Int q : {1L, 7L, 12L}) {
    FatPointScheme y = fixtures::random_simple_points(gen, q);
    HilbertResult hq = hilbert_exact(y, q);
    for (Int t = 0; t <= q; ++t) {
      CHECK(hq.values.at(t) == std::min(choose2(t + 2), q));
    }
  }
}

TEST_CASE("alpha_exact") {
  CHECK(alpha_exact(single_point(1)) == 1);
  CHECK(alpha_exact(single_point(3)) == 3);
  CHECK(alpha_exact(fixtures::three_line_scheme().scheme) == 4);
  CHECK(alpha_exact(FatPointScheme{}) == 0);
}

TEST_CASE("hilbert is weakly increasing and tops out at deg(Y)") {
  std::mt19937_64 gen(24);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<FatPointScheme::Item> items;
    Int n = rand_int(gen, 1, 4);
    for (Int i = 0; i < n; ++i) {
      auto p = fixtures::random_simple_points(gen, 1, 50).items()[0].first;
      bool dup = false;
      for (const auto& [q, m] : items) dup = dup || q == p;
      if (dup) continue;
      items.emplace_back(p, rand_int(gen, 1, 3));
    }
    FatPointScheme y(items);
    HilbertResult h = hilbert_exact(y, 0);
    const IntVec& vals = h.values.prefix();
    for (std::size_t t = 1; t < vals.size(); ++t) {
      CHECK(vals[t] >= vals[t - 1]);
    }
    CHECK(vals.back() == y.degree());
    CHECK(static_cast<Int>(vals.size()) == y.total_multiplicity() + 1);
  }
}

TEST_CASE("f_d bounds H from below; equality under GMS") {
  std::mt19937_64 gen(25);
  int gms_seen = 0;
  for (int iter = 0; iter < 25; ++iter) {
    Int q = rand_int(gen, 1, 3);
    IntVec c(q), a(q);
    for (Int i = 0; i < q; ++i) {
      c[i] = rand_int(gen, 1, 3);
      a[i] = rand_int(gen, 1, 2);
    }
    std::sort(c.begin(), c.end());
    geom::GeometricLCC lcc = geom::build_lcc(NonDecVec(c), a, 500 + iter);
    geom::ReductionTrace trace = geom::schedule_star(lcc);
    NonDecVec d(trace.d);
    DegreeSeq f = seq::f_of(d);
    FatPointScheme y = lcc.scheme();
    HilbertResult h = hilbert_exact(y, y.total_multiplicity());
    bool equal = true;
    for (Int t = 0; t <= y.total_multiplicity() + 1; ++t) {
      CHECK(f.at(t) <= h.values.at(t));
      equal = equal && f.at(t) == h.values.at(t);
    }
    if (seq::is_gms(d)) {
      ++gms_seen;
      CHECK(equal);
    }
  }
  CHECK(gms_seen > 0);
}

TEST_CASE("alpha is monotone under inclusion") {
  std::mt19937_64 gen(26);
  for (int iter = 0; iter < 10; ++iter) {
    FatPointScheme big = fixtures::random_simple_points(gen, rand_int(gen, 2, 8));
    auto items = big.items();
    std::vector<FatPointScheme::Item> sub(items.begin(),
                                          items.begin() + items.size() / 2 + 1);
    FatPointScheme small(sub);
    Int horizon = big.total_multiplicity();
    HilbertResult hb = hilbert_exact(big, horizon);
    HilbertResult hs = hilbert_exact(small, horizon);
    for (Int t = 0; t <= horizon; ++t) {
      CHECK(hs.values.at(t) <= hb.values.at(t));
    }
    // Fewer points reach the Hilbert deficit no later.
    CHECK(alpha_exact(small) <= alpha_exact(big));
  }
}

TEST_CASE("extract_generic_subset examples") {
  // A full line count configuration of type (1,2,3): alpha = 3 and the
  // whole set is already generic.
  geom::GeometricLCC lcc = geom::build_lcc(NonDecVec({1, 2, 3}), {1, 1, 1}, 3);
  FatPointScheme b = lcc.scheme();
  CHECK(alpha_exact(b) == 3);
  FatPointScheme a = extract_generic_subset(b);
  CHECK(a == b);

  // Four collinear points plus one off the line: alpha = 2, and the
  // extraction keeps three non-collinear points.
  FatPointScheme coll({{pt(1, 0, 0), 1},
                       {pt(1, 1, 0), 1},
                       {pt(1, 2, 0), 1},
                       {pt(1, 3, 0), 1},
                       {pt(1, 0, 1), 1}});
  CHECK(alpha_exact(coll) == 2);
  FatPointScheme sub = extract_generic_subset(coll);
  CHECK(sub.point_count() == 3);
  HilbertResult h = hilbert_exact(sub, 2, RankMode::Rational);
  CHECK(h.alpha == 2);
  CHECK(h.values == DegreeSeq({1, 3, 3}, DegreeSeq::Tail::Constant));

  CHECK_THROWS_AS(extract_generic_subset(single_point(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_generic_subset(FatPointScheme{}),
                  std::invalid_argument);
}

TEST_CASE("extract_generic_subset randomized postconditions") {
  std::mt19937_64 gen(27);
  for (int iter = 0; iter < 10; ++iter) {
    // Mix a collinear cluster with generic points so alpha varies.
    std::vector<FatPointScheme::Item> items;
    Int on_line = rand_int(gen, 0, 5);
    for (Int i = 0; i < on_line; ++i) {
      items.emplace_back(pt(1, rand_int(gen, -40, 40), 0), 1);
    }
    Int loose = rand_int(gen, 1, 6);
    for (Int i = 0; i < loose; ++i) {
      items.emplace_back(
          pt(1, rand_int(gen, -40, 40), rand_int(gen, 1, 40)), 1);
    }
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
      return x.first < y.first;
    });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const auto& x, const auto& y) {
                              return x.first == y.first;
                            }),
                items.end());
    FatPointScheme b(items);

    Int alpha_b = alpha_exact(b, RankMode::Rational);
    FatPointScheme a = extract_generic_subset(b);
    CHECK(static_cast<Int>(a.point_count()) == choose2(alpha_b + 1));
    HilbertResult h = hilbert_exact(a, alpha_b, RankMode::Rational);
    CHECK(h.alpha == alpha_b);
    for (Int t = 0; t <= alpha_b; ++t) {
      Int dh = h.values.at(t) - (t == 0 ? 0 : h.values.at(t - 1));
      CHECK(dh == (t < alpha_b ? t + 1 : 0));
    }
  }
}
