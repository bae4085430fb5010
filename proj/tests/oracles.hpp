// Brute-force reference implementations used by the tests. These deliberately
// avoid the library's packed-bitset code paths: orders are closed with plain
// boolean matrices, covers recomputed by triple loops, and bounds found by
// scanning, so a library bug cannot hide behind shared code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "binuc/algebra.hpp"
#include "binuc/lattice.hpp"

namespace oracle {

using Bool2d = std::vector<std::vector<bool>>;

inline Bool2d leq_of(const binuc::FinPoset& p) {
  int n = p.size();
  Bool2d m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = p.leq(i, j);
  return m;
}

inline std::vector<std::pair<int, int>> covers_of(const Bool2d& leq) {
  int n = int(leq.size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool between = false;
      for (int z = 0; z < n && !between; ++z)
        between = z != a && z != b && leq[a][z] && leq[z][b];
      if (!between) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<int> glb(const Bool2d& leq, const std::vector<int>& xs) {
  int n = int(leq.size());
  std::vector<int> cands;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x : xs) ok &= leq[z][x];
    if (ok) cands.push_back(z);
  }
  for (int z : cands) {
    bool greatest = true;
    for (int c : cands) greatest &= leq[c][z];
    if (greatest) return z;
  }
  return std::nullopt;
}

inline std::optional<int> lub(const Bool2d& leq, const std::vector<int>& xs) {
  int n = int(leq.size());
  std::vector<int> cands;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x : xs) ok &= leq[x][z];
    if (ok) cands.push_back(z);
  }
  for (int z : cands) {
    bool least = true;
    for (int c : cands) least &= leq[z][c];
    if (least) return z;
  }
  return std::nullopt;
}

inline int pop_down(const Bool2d& leq, const std::vector<std::pair<int, int>>& covers, int x,
                    int y) {
  std::vector<int> set{y};
  for (auto [lo, hi] : covers)
    if (hi == y && leq[x][lo]) set.push_back(lo);
  return *glb(leq, set);
}

inline int pop_up(const Bool2d& leq, const std::vector<std::pair<int, int>>& covers, int x,
                  int y) {
  std::vector<int> set{x};
  for (auto [lo, hi] : covers)
    if (lo == x && leq[hi][y]) set.push_back(hi);
  return *lub(leq, set);
}

struct NaiveBinuc {
  Bool2d leq;
  std::vector<std::pair<int, int>> covers;
  std::vector<binuc::Interval> intervals;  // binuclear, sorted by (lo, hi)

  explicit NaiveBinuc(const binuc::FinPoset& p) : leq(leq_of(p)), covers(covers_of(leq)) {
    int n = p.size();
    for (int lo = 0; lo < n; ++lo)
      for (int hi = 0; hi < n; ++hi) {
        if (!leq[lo][hi]) continue;
        if (pop_down(leq, covers, lo, hi) == lo && pop_up(leq, covers, lo, hi) == hi)
          intervals.push_back({lo, hi});
      }
    std::sort(intervals.begin(), intervals.end());
  }

  bool ni_leq(binuc::Interval a, binuc::Interval b) const {
    return leq[a.lo][b.lo] && leq[a.hi][b.hi];
  }

  // greatest lower bound of {i, j} among the binuclear intervals, if any
  std::optional<binuc::Interval> ni_glb(binuc::Interval i, binuc::Interval j) const {
    std::vector<binuc::Interval> bounds;
    for (auto x : intervals)
      if (ni_leq(x, i) && ni_leq(x, j)) bounds.push_back(x);
    for (auto z : bounds) {
      bool greatest = true;
      for (auto c : bounds) greatest &= ni_leq(c, z);
      if (greatest) return z;
    }
    return std::nullopt;
  }

  std::optional<binuc::Interval> ni_lub(binuc::Interval i, binuc::Interval j) const {
    std::vector<binuc::Interval> bounds;
    for (auto x : intervals)
      if (ni_leq(i, x) && ni_leq(j, x)) bounds.push_back(x);
    for (auto z : bounds) {
      bool least = true;
      for (auto c : bounds) least &= ni_leq(z, c);
      if (least) return z;
    }
    return std::nullopt;
  }
};

// Torsion classes by scanning every subset against the closure predicates.
inline std::set<std::uint64_t> tors_by_scan(const binuc::AlgebraSpec& a) {
  const int n = a.size();
  std::set<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    binuc::Subcat s{bits};
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (s.contains(x) && !a.indec[x].quotients.subset_of(s)) ok = false;
    for (const auto& q : a.ses) {
      if (!ok) break;
      auto all_in = [&](const std::vector<int>& part) {
        for (int v : part)
          if (!s.contains(v)) return false;
        return true;
      };
      if (all_in(q.sub) && all_in(q.quot) && !all_in(q.mid)) ok = false;
    }
    if (ok) out.insert(bits);
  }
  return out;
}

// Support tau-rigid pairs by scanning all (M, P) subset pairs.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> presilting_by_scan(
    const binuc::AlgebraSpec& a) {
  const int n = a.size();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t mbits = 0; mbits < (std::uint64_t(1) << n); ++mbits) {
    binuc::Subcat m{mbits};
    bool rigid = true;
    for (int x : m.members())
      for (int y : m.members())
        if (a.indec[y].tau && a.hom.get(x, *a.indec[y].tau)) rigid = false;
    if (!rigid) continue;
    for (std::uint64_t pbits = 0; pbits < (std::uint64_t(1) << n); ++pbits) {
      binuc::Subcat p{pbits};
      bool ok = (mbits & pbits) == 0;
      for (int q : p.members()) {
        if (!ok) break;
        if (!a.indec[q].projective) ok = false;
        for (int x : m.members())
          if (a.hom.get(q, x)) ok = false;
      }
      if (ok) out.emplace_back(mbits, pbits);
    }
  }
  return out;
}

// Random meet/join-closed subsets of boolean(4): guaranteed lattices with a
// spread of shapes beyond the named families. Deterministic for a fixed seed.
inline std::vector<binuc::FinLattice> random_sublattices(std::uint64_t seed, int count) {
  binuc::FinLattice ambient = binuc::generate("boolean", 4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, ambient.size() - 1);
  std::vector<binuc::FinLattice> out;
  for (int trial = 0; trial < count; ++trial) {
    std::set<int> members{ambient.bottom(), ambient.top()};
    for (int k = 0; k < 5; ++k) members.insert(pick(rng));
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<int> cur(members.begin(), members.end());
      for (int a : cur)
        for (int b : cur) {
          grew |= members.insert(ambient.meet2(a, b)).second;
          grew |= members.insert(ambient.join2(a, b)).second;
        }
    }
    std::vector<int> elems(members.begin(), members.end());
    const int n = int(elems.size());
    std::vector<std::string> labels(n);
    binuc::BitMatrix leq(n);
    for (int i = 0; i < n; ++i) {
      labels[i] = ambient.label(elems[i]);
      for (int j = 0; j < n; ++j)
        if (ambient.leq(elems[i], elems[j])) leq.set(i, j);
    }
    out.push_back(
        binuc::FinLattice::from_leq("sub" + std::to_string(trial), labels, leq));
  }
  return out;
}

// Fubini (ordered set partition) numbers; the facial weak order of S_n has
// fubini(n) elements.
inline long long fubini(int n) {
  std::vector<std::vector<long long>> choose(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  std::vector<long long> f(n + 1, 0);
  f[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j) f[k] += choose[k][j] * f[k - j];
  return f[n];
}

}  // namespace oracle
