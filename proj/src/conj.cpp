#include "lcc/conj.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace lcc::conj {

Int ell_of(Int r, Parity parity) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return parity == Parity::Even ? 2 * r : 2 * r - 1;
}

Int conjecture_rhs(Int n, Int r, Int alpha_w, Parity parity) {
  if (n < 2 || r < 1 || alpha_w < 0) {
    throw std::invalid_argument("conjecture_rhs: bad parameters");
  }
  return parity == Parity::Even ? r * alpha_w + r * (n - 1)
                                : r * alpha_w + (r - 1) * (n - 1);
}

Report verify_lcc_conjecture(const NonDecVec& c, Int r, Parity parity) {
  if (c.empty()) throw std::invalid_argument("verify_lcc_conjecture: empty c");
  for (Int ci : c) {
    if (ci < 1) throw std::invalid_argument("verify_lcc_conjecture: c entries must be >= 1");
  }
  const Int t = static_cast<Int>(c.size());
  const Int ell = ell_of(r, parity);

  Report rep;
  rep.c = c;
  rep.t = t;
  rep.r = r;
  rep.parity = parity;

  const NonDecVec v = seq::star(IntVec(static_cast<std::size_t>(t), ell),
                                c.vec());
  rep.s_value = seq::s_of(v);
  rep.witness_index = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (static_cast<Int>(i) - v.at1(i) == rep.s_value) {
      rep.witness_index = static_cast<Int>(i);
      break;
    }
  }
  // Doubled bounds: (ell-1)(t-1) odd, ell(t-1) even, i.e. twice
  // (r-1)(t-1) and r(t-1).
  rep.bound.twice_value =
      parity == Parity::Even ? ell * (t - 1) : (ell - 1) * (t - 1);
  rep.outcome = 2 * rep.s_value <= rep.bound.twice_value ? Outcome::BoundHolds
                                                         : Outcome::BoundFails;
  return rep;
}

DominanceResult dominance_check(const NonDecVec& v, const IntVec& w) {
  if (v.size() != w.size()) {
    throw std::invalid_argument("dominance_check: length mismatch");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > v.vec()[i]) {
      throw std::invalid_argument("dominance_check: w must be entrywise <= v");
    }
  }
  DominanceResult res;
  res.s_v = seq::s_of(v);
  res.s_pw = seq::s_of(seq::pi(w));
  res.ok = res.s_v <= res.s_pw;
  return res;
}

namespace {

std::vector<NonDecVec> enumerate_types(Int t, Int cap) {
  std::vector<NonDecVec> out;
  IntVec c(static_cast<std::size_t>(t), 1);
  while (true) {
    out.push_back(NonDecVec(c));
    // Lexicographic successor among non-decreasing vectors in [1,cap]^t.
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == cap) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < c.size(); ++j) c[j] = c[i - 1];
  }
  return out;
}

}  // namespace

SearchResult search_failures(Int ell, Int t, Int cap, Parity parity,
                             int jobs) {
  if (cap < 1 || t < 1) {
    throw std::invalid_argument("search_failures: cap and t must be >= 1");
  }
  if (ell != ell_of(parity == Parity::Even ? ell / 2 : (ell + 1) / 2, parity) ||
      ell < 1) {
    throw std::invalid_argument("search_failures: ell inconsistent with parity");
  }
  const Int r = parity == Parity::Even ? ell / 2 : (ell + 1) / 2;

  SearchResult res;
  res.ell = ell;
  res.t = t;
  res.cap = cap;
  res.parity = parity;

  const std::vector<NonDecVec> candidates = enumerate_types(t, cap);
  res.scanned_count = static_cast<Int>(candidates.size());

  std::vector<char> fails(candidates.size(), 0);
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      fails[k] = verify_lcc_conjecture(candidates[k], r, parity).outcome ==
                 Outcome::BoundFails;
    }
  };
  if (jobs <= 1) {
    eval_range(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t n = candidates.size();
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      std::size_t lo = std::min(n, w * chunk);
      std::size_t hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (fails[k]) res.failing.push_back(candidates[k]);
  }

  // Maximal = every valid cover (one entry bumped, still non-decreasing
  // and within cap) is non-failing.
  for (const NonDecVec& c : res.failing) {
    bool maximal = true;
    for (std::size_t i = 0; i < c.size() && maximal; ++i) {
      IntVec cover = c.vec();
      ++cover[i];
      if (cover[i] > cap) continue;
      if (i + 1 < cover.size() && cover[i] > cover[i + 1]) continue;
      if (verify_lcc_conjecture(NonDecVec(cover), r, parity).outcome ==
          Outcome::BoundFails) {
        maximal = false;
      }
    }
    if (maximal) res.maximal_failing.push_back(c);
  }
  return res;
}

}  // namespace lcc::conj
