#include "binuc/binuclear.hpp"

#include <algorithm>
#include <array>

namespace binuc {

namespace {

std::string ivl_label(const FinLattice& l, Interval i) {
  return "[" + l.label(i.lo) + "," + l.label(i.hi) + "]";
}

void require_leq(const FinLattice& l, int x, int y) {
  if (!l.leq(x, y))
    fail(Errc::not_comparable,
         "'" + l.label(x) + "' is not below '" + l.label(y) + "'");
}

}  // namespace

int pop_down(const FinLattice& l, int x, int y) {
  require_leq(l, x, y);
  std::vector<int> zs{y};
  for (int z : l.lower_covers(y))
    if (l.leq(x, z)) zs.push_back(z);
  return l.meet(zs);
}

int pop_up(const FinLattice& l, int x, int y) {
  require_leq(l, x, y);
  std::vector<int> zs{x};
  for (int z : l.upper_covers(x))
    if (l.leq(z, y)) zs.push_back(z);
  return l.join(zs);
}

IntervalClass classify_interval(const FinLattice& l, Interval i) {
  require_leq(l, i.lo, i.hi);
  IntervalClass c;
  c.nuclear = pop_down(l, i.lo, i.hi) == i.lo;
  c.conuclear = pop_up(l, i.lo, i.hi) == i.hi;
  return c;
}

std::vector<Interval> binuclear_intervals(const FinLattice& l) {
  std::vector<Interval> out;
  for (int lo = 0; lo < l.size(); ++lo)
    for (int hi = 0; hi < l.size(); ++hi) {
      if (!l.leq(lo, hi)) continue;
      Interval i{lo, hi};
      if (classify_interval(l, i).binuclear()) out.push_back(i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

BinuclearVerdict is_binuclear_lattice(const FinLattice& l) {
  for (int lo = 0; lo < l.size(); ++lo)
    for (int hi = 0; hi < l.size(); ++hi) {
      if (!l.leq(lo, hi)) continue;
      auto c = classify_interval(l, {lo, hi});
      if (c.nuclear != c.conuclear)
        return {false, Interval{lo, hi}, c.nuclear};
    }
  return {true, std::nullopt, false};
}

int BinucPoset::index_of(Interval i) const {
  for (int k = 0; k < int(intervals.size()); ++k)
    if (intervals[k] == i) return k;
  return -1;
}

int BinucPoset::at(Interval i) const {
  int k = index_of(i);
  if (k < 0)
    fail(Errc::bad_params, "interval is not binuclear in this lattice");
  return k;
}

BinucPoset build_ni_order(const FinLattice& l) {
  BinucPoset bp;
  auto sorted = binuclear_intervals(l);
  const int m = int(sorted.size());
  std::vector<std::string> labels(m);
  for (int k = 0; k < m; ++k) labels[k] = ivl_label(l, sorted[k]);
  BitMatrix leq(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (l.leq(sorted[a].lo, sorted[b].lo) && l.leq(sorted[a].hi, sorted[b].hi))
        leq.set(a, b);
  bp.order = FinPoset::from_leq(l.name() + "-binuc", labels, leq);
  // from_leq re-sorts elements by (height, label); align intervals with the
  // final element ids.
  bp.intervals.resize(m);
  for (int k = 0; k < m; ++k) bp.intervals[bp.order.at(labels[k])] = sorted[k];
  return bp;
}

NiContext::NiContext(const FinLattice& l)
    : base(l), poset(build_ni_order(l)), base_binuclear(is_binuclear_lattice(l).ok) {}

namespace {

bool ni_leq(const FinLattice& l, Interval a, Interval b) {
  return l.leq(a.lo, b.lo) && l.leq(a.hi, b.hi);
}

NiBound ni_bound(const NiContext& ctx, Interval i, Interval j, bool meet_side) {
  const FinLattice& l = ctx.base;
  if (!ctx.base_binuclear)
    fail(Errc::not_binuclear_lattice,
         "'" + l.name() + "' has nuclear intervals that are not conuclear (or dually)");
  for (Interval x : {i, j})
    if (ctx.poset.index_of(x) < 0)
      fail(Errc::not_binuclear_input, ivl_label(l, x) + " is not binuclear");

  NiBound r;
  if (meet_side) {
    int lo = l.meet2(i.lo, j.lo);
    int hicap = l.meet2(i.hi, j.hi);
    r.candidate = {lo, pop_up(l, lo, hicap)};
  } else {
    int hi = l.join2(i.hi, j.hi);
    int locap = l.join2(i.lo, j.lo);
    r.candidate = {pop_down(l, locap, hi), hi};
  }

  // brute-force verification over binuc(l)
  auto bounds_pair = [&](Interval x) {
    return meet_side ? (ni_leq(l, x, i) && ni_leq(l, x, j))
                     : (ni_leq(l, i, x) && ni_leq(l, j, x));
  };
  auto below = [&](Interval a, Interval b) { return meet_side ? ni_leq(l, a, b) : ni_leq(l, b, a); };

  std::vector<Interval> bounds;
  for (Interval x : ctx.poset.intervals)
    if (bounds_pair(x)) bounds.push_back(x);

  bool cand_ok = ctx.poset.index_of(r.candidate) >= 0 && bounds_pair(r.candidate);
  if (cand_ok) {
    bool extremal = true;
    for (Interval x : bounds)
      if (!below(x, r.candidate)) { extremal = false; break; }
    if (extremal) {
      r.exists = true;
      r.value = r.candidate;
      return r;
    }
  }
  // report a maximal (resp. minimal) bound not comparable with the candidate
  for (Interval x : bounds) {
    if (cand_ok && below(x, r.candidate)) continue;
    bool extremal_among = true;
    for (Interval y : bounds)
      if (y != x && below(x, y)) { extremal_among = false; break; }
    if (extremal_among) { r.witness = x; break; }
  }
  r.exists = false;
  return r;
}

}  // namespace

NiBound ni_meet(const NiContext& ctx, Interval i, Interval j) { return ni_bound(ctx, i, j, true); }
NiBound ni_join(const NiContext& ctx, Interval i, Interval j) { return ni_bound(ctx, i, j, false); }

NiBound ni_meet(const FinLattice& l, Interval i, Interval j) {
  NiContext ctx(l);
  return ni_meet(ctx, i, j);
}

NiBound ni_join(const FinLattice& l, Interval i, Interval j) {
  NiContext ctx(l);
  return ni_join(ctx, i, j);
}

BezVerdict check_bez(const FinPoset& p) {
  const int n = p.size();
  for (int z = 0; z < n; ++z) {
    const auto& below = p.lower_covers(z);
    for (size_t a = 0; a < below.size(); ++a)
      for (size_t b = a + 1; b < below.size(); ++b)
        if (!p.glb2(below[a], below[b]))
          return {false, false, std::array<int, 3>{below[a], below[b], z}};
  }
  return {true, true, std::nullopt};
}

std::vector<Interval> ice_intervals(const FinLattice& l) {
  std::vector<Interval> out;
  for (int lo = 0; lo < l.size(); ++lo) {
    int cap = pop_up(l, lo, l.top());
    for (int hi = 0; hi < l.size(); ++hi)
      if (l.leq(lo, hi) && l.leq(hi, cap)) out.push_back({lo, hi});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace binuc
