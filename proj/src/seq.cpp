#include "lcc/seq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcc {

NonDecVec::NonDecVec(IntVec v) : v_(std::move(v)) {
  if (!std::is_sorted(v_.begin(), v_.end())) {
    throw std::invalid_argument("NonDecVec: entries must be non-decreasing");
  }
}

NonDecVec NonDecVec::sorted(IntVec v) {
  std::sort(v.begin(), v.end());
  NonDecVec out;
  out.v_ = std::move(v);
  return out;
}

DegreeSeq::DegreeSeq(IntVec prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  for (Int p : prefix_) {
    if (p < 0) throw std::invalid_argument("DegreeSeq: entries must be >= 0");
  }
  if (tail_ == Tail::Constant && prefix_.empty()) {
    throw std::invalid_argument("DegreeSeq: constant tail needs a prefix");
  }
}

Int DegreeSeq::at(Int t) const {
  if (t < 0) throw std::invalid_argument("DegreeSeq: t must be >= 0");
  if (static_cast<std::size_t>(t) < prefix_.size()) return prefix_[t];
  return eventual();
}

Int DegreeSeq::eventual() const {
  if (tail_ == Tail::Zero || prefix_.empty()) return 0;
  return prefix_.back();
}

bool operator==(const DegreeSeq& a, const DegreeSeq& b) {
  // Pointwise equality: agree on both prefixes and on the eventual value.
  Int n = static_cast<Int>(std::max(a.prefix_.size(), b.prefix_.size()));
  for (Int t = 0; t < n; ++t) {
    if (a.at(t) != b.at(t)) return false;
  }
  return a.eventual() == b.eventual();
}

namespace seq {

NonDecVec pi(const IntVec& v) { return NonDecVec::sorted(v); }

IntVec circ(const IntVec& a, const IntVec& m) {
  if (a.size() != m.size()) {
    throw std::invalid_argument("circ: vectors must have equal length");
  }
  Int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || m[i] < 1) {
      throw std::invalid_argument("circ: entries must be >= 1");
    }
    total += a[i];
  }
  IntVec out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Int k = 1; k <= a[i]; ++k) out.push_back(k * m[i]);
  }
  return out;
}

NonDecVec star(const IntVec& a, const IntVec& m) { return pi(circ(a, m)); }

IntVec delta(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = (i == 0) ? v[0] : v[i] - v[i - 1];
  }
  return out;
}

bool is_gms(const NonDecVec& v) {
  IntVec d = delta(v.vec());
  // Enough to look between consecutive zeros of delta.
  std::size_t prev_zero = d.size();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) continue;
    if (prev_zero != d.size()) {
      bool found = false;
      for (std::size_t r = prev_zero + 1; r < i; ++r) {
        if (d[r] > 1) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    prev_zero = i;
  }
  return true;
}

std::vector<LatticePoint> standard_config(const IntVec& v) {
  const std::size_t m = v.size();
  std::vector<LatticePoint> pts;
  for (std::size_t j = 0; j < m; ++j) {
    Int row_len = v[m - 1 - j];  // v_{m-j}, 1-based
    if (row_len < 0) throw std::invalid_argument("standard_config: entries must be >= 0");
    for (Int i = 0; i < row_len; ++i) {
      pts.push_back({i, static_cast<Int>(j)});
    }
  }
  return pts;
}

DegreeSeq diag(const IntVec& v) {
  const std::size_t m = v.size();
  Int max_t = -1;
  for (std::size_t j = 0; j < m; ++j) {
    Int row_len = v[m - 1 - j];
    if (row_len < 0) throw std::invalid_argument("diag: entries must be >= 0");
    if (row_len > 0) max_t = std::max(max_t, static_cast<Int>(j) + row_len - 1);
  }
  if (max_t < 0) return DegreeSeq{};  // no points at all
  IntVec counts(static_cast<std::size_t>(max_t) + 1, 0);
  for (std::size_t j = 0; j < m; ++j) {
    Int row_len = v[m - 1 - j];
    // row y = j contributes to diagonals t = j .. j + row_len - 1
    for (Int t = static_cast<Int>(j); t < static_cast<Int>(j) + row_len; ++t) {
      ++counts[static_cast<std::size_t>(t)];
    }
  }
  return DegreeSeq(std::move(counts), DegreeSeq::Tail::Zero);
}

Int alpha_of(const DegreeSeq& w) {
  const IntVec& p = w.prefix();
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] < static_cast<Int>(t) + 1) return static_cast<Int>(t);
  }
  Int n = static_cast<Int>(p.size());
  if (w.tail() == DegreeSeq::Tail::Zero) return n;  // 0 < n + 1
  // Constant tail c: least t >= n with c < t + 1.
  return std::max(n, w.eventual());
}

Int alpha_diag_closed(const NonDecVec& d) {
  Int s = static_cast<Int>(d.size());
  Int worst = 0;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    worst = std::min(worst, d.at1(i) - static_cast<Int>(i));
  }
  return s + worst;
}

DegreeSeq f_of(const NonDecVec& d) {
  DegreeSeq dg = diag(d.vec());
  if (dg.prefix().empty()) return DegreeSeq{};
  IntVec sums(dg.prefix().size());
  std::partial_sum(dg.prefix().begin(), dg.prefix().end(), sums.begin());
  return DegreeSeq(std::move(sums), DegreeSeq::Tail::Constant);
}

Int s_of(const NonDecVec& v) {
  Int best = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    best = std::max(best, static_cast<Int>(i) - v.at1(i));
  }
  return best;
}

}  // namespace seq
}  // namespace lcc
