#pragma once

#include <random>

#include "lcc/geom.hpp"
#include "lcc/seq.hpp"

namespace fixtures {

using lcc::Int;
using lcc::IntVec;
using lcc::geom::FatPointScheme;
using lcc::geom::ProjLine;
using lcc::geom::ProjPoint;

// Deterministic integer in [lo, hi]; plain modulo so the stream is
// pinned by mt19937_64 alone.
inline Int rand_int(std::mt19937_64& gen, Int lo, Int hi) {
  return lo + static_cast<Int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline ProjPoint pt(Int a, Int b, Int c) {
  return ProjPoint(lcc::geom::HomTriple::of_ints(a, b, c));
}

inline ProjLine ln(Int a, Int b, Int c) {
  return ProjLine(lcc::geom::HomTriple::of_ints(a, b, c));
}

// Three lines l1: x1 = x2, l2: 5x0 = x1 + x2, l3: x0 = 2x2, and eight
// points of total degree 17.  Two of the points sit at line meets
// (l1&l3 and l1&l2), so this is a general fat point scheme, not a line
// count configuration.  Totally reduced by applying l1, l2, l3, l1 with
// reduction vector (2, 3, 4, 8).
struct ThreeLineScheme {
  FatPointScheme scheme;
  ProjLine l1, l2, l3;
};

inline ThreeLineScheme three_line_scheme() {
  ThreeLineScheme s{FatPointScheme{}, ln(0, 1, -1), ln(5, -1, -1),
                    ln(1, 0, -2)};
  std::vector<FatPointScheme::Item> items;
  items.emplace_back(pt(2, 1, 1), 3);    // on l1 and l3
  items.emplace_back(pt(6, 7, 7), 1);    // on l1
  items.emplace_back(pt(6, 11, 11), 2);  // on l1
  items.emplace_back(pt(2, 5, 5), 2);    // on l1 and l2
  items.emplace_back(pt(1, 3, 2), 1);    // on l2
  items.emplace_back(pt(2, 7, 3), 1);    // on l2
  items.emplace_back(pt(1, 4, 1), 1);    // on l2
  items.emplace_back(pt(2, 11, 1), 1);   // on l3
  s.scheme = FatPointScheme(std::move(items));
  return s;
}

// Random distinct simple points with coordinates in [-bound, bound].
inline FatPointScheme random_simple_points(std::mt19937_64& gen, Int count,
                                           Int bound = 1000) {
  std::vector<FatPointScheme::Item> items;
  while (static_cast<Int>(items.size()) < count) {
    Int a = rand_int(gen, -bound, bound);
    Int b = rand_int(gen, -bound, bound);
    Int c = rand_int(gen, -bound, bound);
    if (a == 0 && b == 0 && c == 0) continue;
    ProjPoint p = pt(a, b, c);
    bool dup = false;
    for (const auto& [q, m] : items) dup = dup || q == p;
    if (dup) continue;
    items.emplace_back(p, 1);
  }
  return FatPointScheme(std::move(items));
}

}  // namespace fixtures
