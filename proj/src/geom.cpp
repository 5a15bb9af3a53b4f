#include "lcc/geom.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lcc::geom {

HomTriple::HomTriple(const Rat& a, const Rat& b, const Rat& c) {
  Rat r[3] = {a, b, c};
  mpz_class scale = 1;
  for (auto& x : r) {
    x.canonicalize();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
            x.get_den().get_mpz_t());
  }
  for (int i = 0; i < 3; ++i) {
    mpz_class num = r[i].get_num() * (scale / r[i].get_den());
    z_[i] = num;
  }
  mpz_class g = 0;
  for (const auto& z : z_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw std::invalid_argument("HomTriple: all coordinates zero");
  for (auto& z : z_) z /= g;
  for (const auto& z : z_) {
    if (z != 0) {
      if (z < 0) {
        for (auto& w : z_) w = -w;
      }
      break;
    }
  }
}

HomTriple HomTriple::of_ints(Int a, Int b, Int c) {
  return HomTriple(Rat(static_cast<long>(a)), Rat(static_cast<long>(b)),
                   Rat(static_cast<long>(c)));
}

int HomTriple::compare(const HomTriple& a, const HomTriple& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a.z_[i], b.z_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string HomTriple::str() const {
  return z_[0].get_str() + ":" + z_[1].get_str() + ":" + z_[2].get_str();
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  mpz_class dot = 0;
  for (int i = 0; i < 3; ++i) dot += p.coords()[i] * l.coeffs()[i];
  return dot == 0;
}

namespace {

HomTriple cross(const HomTriple& u, const HomTriple& v) {
  mpz_class c0 = u[1] * v[2] - u[2] * v[1];
  mpz_class c1 = u[2] * v[0] - u[0] * v[2];
  mpz_class c2 = u[0] * v[1] - u[1] * v[0];
  return HomTriple(Rat(c0), Rat(c1), Rat(c2));  // throws if u, v parallel
}

}  // namespace

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw std::invalid_argument("line_through: points coincide");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw std::invalid_argument("meet: lines coincide");
  return ProjPoint(cross(l.coeffs(), m.coeffs()));
}

FatPointScheme::FatPointScheme(std::vector<Item> items) {
  for (const auto& [p, m] : items) {
    if (m < 0) throw std::invalid_argument("FatPointScheme: negative multiplicity");
    if (m > 0) items_.emplace_back(p, m);
  }
  std::sort(items_.begin(), items_.end(),
            [](const Item& a, const Item& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (items_[i - 1].first == items_[i].first) {
      throw std::invalid_argument("FatPointScheme: duplicate point " +
                                  items_[i].first.str());
    }
  }
}

std::vector<ProjPoint> FatPointScheme::support() const {
  std::vector<ProjPoint> out;
  out.reserve(items_.size());
  for (const auto& [p, m] : items_) out.push_back(p);
  return out;
}

Int FatPointScheme::multiplicity_of(const ProjPoint& p) const {
  for (const auto& [q, m] : items_) {
    if (q == p) return m;
  }
  return 0;
}

Int FatPointScheme::degree() const {
  Int sum = 0;
  for (const auto& [p, m] : items_) sum += m * (m + 1) / 2;
  return sum;
}

Int FatPointScheme::total_multiplicity() const {
  Int sum = 0;
  for (const auto& [p, m] : items_) sum += m;
  return sum;
}

FatPointScheme residual(const FatPointScheme& y, const ProjLine& l) {
  std::vector<FatPointScheme::Item> items;
  items.reserve(y.items().size());
  for (const auto& [p, m] : y.items()) {
    items.emplace_back(p, incident(p, l) ? std::max<Int>(m - 1, 0) : m);
  }
  return FatPointScheme(std::move(items));
}

Int line_weight(const FatPointScheme& y, const ProjLine& l) {
  Int sum = 0;
  for (const auto& [p, m] : y.items()) {
    if (incident(p, l)) sum += m;
  }
  return sum;
}

ReductionTrace reduce_by_sequence(const FatPointScheme& y,
                                  const std::vector<ProjLine>& lines) {
  ReductionTrace trace;
  trace.lines_applied = lines;
  // Walk forward, then flip into the Y_0..Y_n / d_1..d_n convention.
  std::vector<FatPointScheme> forward;
  IntVec weights;
  forward.push_back(y);
  for (const auto& l : lines) {
    weights.push_back(line_weight(forward.back(), l));
    forward.push_back(residual(forward.back(), l));
  }
  trace.steps.assign(forward.rbegin(), forward.rend());
  trace.d.assign(weights.rbegin(), weights.rend());
  trace.totally_reduced = forward.back().empty();
  return trace;
}

FatPointScheme GeometricLCC::scheme() const {
  std::vector<FatPointScheme::Item> items;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (const auto& p : groups[i]) items.emplace_back(p, mults[i]);
  }
  return FatPointScheme(std::move(items));
}

void GeometricLCC::validate() const {
  const std::size_t q = lines.size();
  if (groups.size() != q || type.size() != q || mults.size() != q) {
    throw std::logic_error("GeometricLCC: inconsistent sizes");
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (lines[i] == lines[j]) throw std::logic_error("GeometricLCC: repeated line");
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    if (static_cast<Int>(groups[i].size()) != type.at1(i + 1)) {
      throw std::logic_error("GeometricLCC: group size mismatch");
    }
    if (mults[i] < 1) throw std::logic_error("GeometricLCC: multiplicity < 1");
    for (const auto& p : groups[i]) {
      if (!incident(p, lines[i])) {
        throw std::logic_error("GeometricLCC: point off its line");
      }
      // On exactly one configuration line, i.e. at no pairwise meet.
      for (std::size_t j = 0; j < q; ++j) {
        if (j != i && incident(p, lines[j])) {
          throw std::logic_error("GeometricLCC: point at a line intersection");
        }
      }
    }
    for (std::size_t u = 0; u < groups[i].size(); ++u) {
      for (std::size_t v = u + 1; v < groups[i].size(); ++v) {
        if (groups[i][u] == groups[i][v]) {
          throw std::logic_error("GeometricLCC: repeated point in a group");
        }
      }
    }
  }
}

namespace {

constexpr int kRetryBudget = 10000;

Int draw_coord(std::mt19937_64& gen) {
  return static_cast<Int>(gen() % 2001) - 1000;
}

// Two independent integer points spanning the line a0 x0 + a1 x1 + a2 x2 = 0.
std::pair<HomTriple, HomTriple> line_basis(const ProjLine& l) {
  const auto& a = l.coeffs();
  auto t = [](const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    return HomTriple(Rat(x), Rat(y), Rat(z));
  };
  if (a[0] != 0) return {t(-a[1], a[0], 0), t(-a[2], 0, a[0])};
  if (a[1] != 0) return {t(1, 0, 0), t(0, -a[2], a[1])};
  return {t(1, 0, 0), t(0, 1, 0)};
}

}  // namespace

GeometricLCC build_lcc(const NonDecVec& c, const IntVec& a,
                       std::uint64_t seed) {
  if (c.empty()) throw std::invalid_argument("build_lcc: empty type vector");
  if (a.size() != c.size()) {
    throw std::invalid_argument("build_lcc: type/multiplicity length mismatch");
  }
  for (std::size_t i = 1; i <= c.size(); ++i) {
    if (c.at1(i) < 1) throw std::invalid_argument("build_lcc: type entries must be >= 1");
    if (a[i - 1] < 1) throw std::invalid_argument("build_lcc: multiplicities must be >= 1");
  }

  std::mt19937_64 gen(seed);
  int budget = kRetryBudget;
  auto spend = [&budget]() {
    if (--budget < 0) {
      throw std::runtime_error(
          "build_lcc: retry budget exhausted; coordinate bound too small for "
          "this configuration");
    }
  };

  GeometricLCC out;
  out.type = c;
  out.mults = a;
  const std::size_t q = c.size();

  while (out.lines.size() < q) {
    spend();
    Int a0 = draw_coord(gen), a1 = draw_coord(gen), a2 = draw_coord(gen);
    if (a0 == 0 && a1 == 0 && a2 == 0) continue;
    ProjLine l(Rat(static_cast<long>(a0)), Rat(static_cast<long>(a1)),
               Rat(static_cast<long>(a2)));
    if (std::find(out.lines.begin(), out.lines.end(), l) != out.lines.end()) {
      continue;
    }
    out.lines.push_back(l);
  }

  std::set<ProjPoint> forbidden;  // pairwise intersections
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      forbidden.insert(meet(out.lines[i], out.lines[j]));
    }
  }

  out.groups.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    auto [b0, b1] = line_basis(out.lines[i]);
    auto& group = out.groups[i];
    while (static_cast<Int>(group.size()) < c.at1(i + 1)) {
      spend();
      Int s = draw_coord(gen), u = draw_coord(gen);
      if (s == 0 && u == 0) continue;
      HomTriple pt(Rat(s * b0[0] + u * b1[0]), Rat(s * b0[1] + u * b1[1]),
                   Rat(s * b0[2] + u * b1[2]));
      ProjPoint p(pt);
      if (forbidden.count(p)) continue;
      if (std::find(group.begin(), group.end(), p) != group.end()) continue;
      group.push_back(p);
    }
  }

  out.validate();
  return out;
}

namespace {

ReductionTrace run_schedule(const GeometricLCC& t,
                            const std::vector<std::size_t>& order) {
  std::vector<ProjLine> lines;
  lines.reserve(order.size());
  for (std::size_t i : order) lines.push_back(t.lines[i]);
  return reduce_by_sequence(t.scheme(), lines);
}

bool next_multiset_permutation(std::vector<std::size_t>& v) {
  return std::next_permutation(v.begin(), v.end());
}

}  // namespace

ReductionTrace schedule_star(const GeometricLCC& t) {
  t.validate();
  const IntVec target = seq::star(t.mults, t.type.vec()).vec();

  // Greedy: heaviest line first.  Lines of a configuration share no
  // points, so applying one never changes another's weight.
  FatPointScheme y = t.scheme();
  std::vector<std::size_t> order;
  IntVec remaining = t.mults;
  const Int total = static_cast<Int>(target.size());
  for (Int step = 0; step < total; ++step) {
    std::size_t best = t.lines.size();
    Int best_w = -1;
    for (std::size_t i = 0; i < t.lines.size(); ++i) {
      if (remaining[i] == 0) continue;
      Int w = line_weight(y, t.lines[i]);
      if (w > best_w) {
        best_w = w;
        best = i;
      }
    }
    order.push_back(best);
    --remaining[best];
    y = residual(y, t.lines[best]);
  }
  ReductionTrace trace = run_schedule(t, order);
  if (trace.d == target && trace.totally_reduced) return trace;

  if (total <= 10) {
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < t.lines.size(); ++i) {
      for (Int k = 0; k < t.mults[i]; ++k) perm.push_back(i);
    }
    std::sort(perm.begin(), perm.end());
    do {
      ReductionTrace cand = run_schedule(t, perm);
      if (cand.d == target && cand.totally_reduced) return cand;
    } while (next_multiset_permutation(perm));
  }
  throw ScheduleError("schedule_star: no application order realizes star(a,c)",
                      trace.d);
}

}  // namespace lcc::geom
