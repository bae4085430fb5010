#include "binuc/semidistrib.hpp"

#include <algorithm>

namespace binuc {

bool IrreducibleData::is_cj(int x) const { return star_below(x) >= 0; }
bool IrreducibleData::is_cm(int x) const { return star_above(x) >= 0; }

int IrreducibleData::star_below(int j) const {
  for (auto& [a, b] : cj)
    if (a == j) return b;
  return -1;
}

int IrreducibleData::star_above(int m) const {
  for (auto& [a, b] : cm)
    if (a == m) return b;
  return -1;
}

IrreducibleData irreducibles(const FinLattice& l) {
  IrreducibleData d;
  for (int x = 0; x < l.size(); ++x) {
    if (l.lower_covers(x).size() == 1) d.cj.emplace_back(x, l.lower_covers(x)[0]);
    if (l.upper_covers(x).size() == 1) d.cm.emplace_back(x, l.upper_covers(x)[0]);
  }
  return d;
}

namespace {

KappaResult max_of(const FinLattice& l, const std::vector<int>& set, bool want_max) {
  KappaResult r;
  for (int y : set) {
    bool extremal = true;
    for (int z : set)
      if (z != y && (want_max ? l.lt(y, z) : l.lt(z, y))) { extremal = false; break; }
    if (extremal) r.antichain.push_back(y);
  }
  if (r.antichain.size() == 1) r.value = r.antichain[0];
  return r;
}

}  // namespace

KappaResult kappa(const FinLattice& l, int j) {
  auto irr = irreducibles(l);
  int jstar = irr.star_below(j);
  if (jstar < 0)
    fail(Errc::not_join_irreducible, "'" + l.label(j) + "' is not completely join-irreducible");
  // K(j) = {y : j_* <= y and j !<= y}
  std::vector<int> k;
  for (int y = 0; y < l.size(); ++y)
    if (l.leq(jstar, y) && !l.leq(j, y)) k.push_back(y);
  return max_of(l, k, true);
}

KappaResult kappa_dual(const FinLattice& l, int m) {
  auto irr = irreducibles(l);
  int mstar = irr.star_above(m);
  if (mstar < 0)
    fail(Errc::not_meet_irreducible, "'" + l.label(m) + "' is not completely meet-irreducible");
  std::vector<int> k;
  for (int y = 0; y < l.size(); ++y)
    if (l.leq(y, mstar) && !l.leq(y, m)) k.push_back(y);
  return max_of(l, k, false);
}

SdVerdict check_semidistributivity(const FinLattice& l) {
  SdVerdict v;
  const int n = l.size();
  for (int x = 0; x < n && (v.meet_sd || v.join_sd); ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        if (v.meet_sd && l.meet2(x, y) == l.meet2(x, z) &&
            l.meet2(x, l.join2(y, z)) != l.meet2(x, y)) {
          v.meet_sd = false;
          v.meet_witness = std::array<int, 3>{x, y, z};
        }
        if (v.join_sd && l.join2(x, y) == l.join2(x, z) &&
            l.join2(x, l.meet2(y, z)) != l.join2(x, y)) {
          v.join_sd = false;
          v.join_witness = std::array<int, 3>{x, y, z};
        }
        if (!v.meet_sd && !v.join_sd) return v;
      }
  return v;
}

KappaFlags check_kappa_properties(const FinLattice& l) {
  KappaFlags f;
  auto irr = irreducibles(l);
  const int n = l.size();

  // spatial: every element is the join of the cj-irreducibles below it
  f.spatial = true;
  for (int x = 0; x < n && f.spatial; ++x) {
    std::vector<int> below;
    for (auto& [j, js] : irr.cj)
      if (l.leq(j, x)) below.push_back(j);
    if (l.join(below) != x) {
      f.spatial = false;
      f.notes.push_back("spatial fails at '" + l.label(x) + "'");
    }
  }
  f.co_spatial = true;
  for (int x = 0; x < n && f.co_spatial; ++x) {
    std::vector<int> above;
    for (auto& [m, ms] : irr.cm)
      if (l.leq(x, m)) above.push_back(m);
    if (l.meet(above) != x) {
      f.co_spatial = false;
      f.notes.push_back("co-spatial fails at '" + l.label(x) + "'");
    }
  }

  // meet side
  f.meet_kappa = f.co_spatial;
  for (auto& [j, js] : irr.cj) {
    if (!kappa(l, j).value) {
      f.meet_kappa = false;
      f.notes.push_back("K('" + l.label(j) + "') has no maximum");
      break;
    }
  }
  f.weak_meet_kappa = f.co_spatial;
  for (auto& [j, js] : irr.cj) {
    if (!f.weak_meet_kappa) break;
    int count = 0;
    for (auto& [m, ms] : irr.cm)
      if (l.join2(m, j) == ms && l.meet2(m, j) == js) ++count;
    if (count != 1) {
      f.weak_meet_kappa = false;
      f.notes.push_back("weak meet-kappa fails at '" + l.label(j) + "' (" +
                        std::to_string(count) + " partners)");
    }
  }

  // join side (dual)
  f.join_kappa = f.spatial;
  for (auto& [m, ms] : irr.cm) {
    if (!kappa_dual(l, m).value) {
      f.join_kappa = false;
      f.notes.push_back("dual K('" + l.label(m) + "') has no minimum");
      break;
    }
  }
  f.weak_join_kappa = f.spatial;
  for (auto& [m, ms] : irr.cm) {
    if (!f.weak_join_kappa) break;
    int count = 0;
    for (auto& [j, js] : irr.cj)
      if (l.join2(m, j) == ms && l.meet2(m, j) == js) ++count;
    if (count != 1) {
      f.weak_join_kappa = false;
      f.notes.push_back("weak join-kappa fails at '" + l.label(m) + "' (" +
                        std::to_string(count) + " partners)");
    }
  }

  // well-separated: x !<= y admits j <= x with y <= kappa(j)
  f.well_separated = f.weak_meet_kappa && f.weak_join_kappa;
  if (f.well_separated) {
    std::vector<std::pair<int, int>> kappa_of;  // (j, kappa(j)) where defined
    for (auto& [j, js] : irr.cj) {
      auto k = kappa(l, j);
      if (k.value) kappa_of.emplace_back(j, *k.value);
    }
    for (int x = 0; x < n && f.well_separated; ++x)
      for (int y = 0; y < n && f.well_separated; ++y) {
        if (l.leq(x, y)) continue;
        bool found = false;
        for (auto& [j, kj] : kappa_of)
          if (l.leq(j, x) && l.leq(y, kj)) { found = true; break; }
        if (!found) {
          f.well_separated = false;
          f.notes.push_back("no separating irreducible for '" + l.label(x) + "' !<= '" +
                            l.label(y) + "'");
        }
      }
  }
  return f;
}

int KappaMap::image_of(int j) const {
  for (auto& [a, b] : forward)
    if (a == j) return b;
  return -1;
}

int KappaMap::preimage_of(int m) const {
  for (auto& [a, b] : backward)
    if (a == m) return b;
  return -1;
}

KappaMap kappa_map(const FinLattice& l) {
  KappaMap map;
  auto irr = irreducibles(l);
  for (auto& [j, jstar] : irr.cj) {
    auto k = kappa(l, j);
    if (k.value) map.forward.emplace_back(j, *k.value);
  }
  for (auto& [m, mstar] : irr.cm) {
    auto k = kappa_dual(l, m);
    if (k.value) map.backward.emplace_back(m, *k.value);
  }
  return map;
}

KappaNiResult kappa_ni(const FinLattice& l) {
  auto sd = check_semidistributivity(l);
  if (!sd.meet_sd || !sd.join_sd)
    fail(Errc::precondition_failed, "'" + l.name() + "' is not semidistributive");
  KappaNiResult r;
  r.poset = build_ni_order(l);
  auto bez = check_bez(r.poset.order);
  auto latv = is_lattice(r.poset.order);
  if (!bez.ok || !latv.ok)
    fail(Errc::precondition_failed, "binuc('" + l.name() + "') is not a lattice");
  r.order = FinLattice::from_poset(r.poset.order);

  auto irr = irreducibles(l);
  for (auto& [j, jstar] : irr.cj) {
    auto kj = kappa(l, j);
    if (!kj.value) fail(Errc::precondition_failed, "kappa undefined on semidistributive input");
    int m = *kj.value;
    int mstar = irr.star_above(m);
    if (mstar < 0) fail(Errc::mismatch, "kappa image not meet-irreducible");
    r.map.emplace_back(Interval{j, j}, Interval{m, mstar});
    r.map.emplace_back(Interval{jstar, j}, Interval{m, m});
  }
  std::sort(r.map.begin(), r.map.end(),
            [](auto& a, auto& b) { return a.first < b.first; });

  // cross-check against kappa computed directly on the interval order
  auto irr_ni = irreducibles(r.order);
  if (irr_ni.cj.size() != r.map.size())
    fail(Errc::mismatch, "formula yields " + std::to_string(r.map.size()) +
                             " join-irreducibles, interval order has " +
                             std::to_string(irr_ni.cj.size()));
  for (auto& [iv, target] : r.map) {
    int e = r.poset.index_of(iv);
    if (e < 0 || !irr_ni.is_cj(e))
      fail(Errc::mismatch, "interval from the formula is not join-irreducible in binuc");
    auto direct = kappa(r.order, e);
    if (!direct.value || r.poset.interval(*direct.value) != target)
      fail(Errc::mismatch, "formula and direct kappa disagree at [" + l.label(iv.lo) + "," +
                               l.label(iv.hi) + "]");
  }
  return r;
}

CjirrReport verify_cjirr_binuc(const FinLattice& l) {
  CjirrReport rep;
  auto bp = build_ni_order(l);
  auto latv = is_lattice(bp.order);
  if (!latv.ok) fail(Errc::precondition_failed, "binuc('" + l.name() + "') is not a lattice");
  FinLattice ni = FinLattice::from_poset(bp.order);

  auto irr_l = irreducibles(l);
  auto irr_ni = irreducibles(ni);

  auto note = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  for (auto& [e, estar] : irr_ni.cj) rep.cj_intervals.push_back(bp.interval(e));
  for (auto& [e, estar] : irr_ni.cm) rep.cm_intervals.push_back(bp.interval(e));
  std::sort(rep.cj_intervals.begin(), rep.cj_intervals.end());
  std::sort(rep.cm_intervals.begin(), rep.cm_intervals.end());

  for (int e = 0; e < ni.size(); ++e) {
    Interval iv = bp.interval(e);
    bool cj_ni = irr_ni.is_cj(e);
    bool cj_hi = irr_l.is_cj(iv.hi);
    if (cj_ni != cj_hi)
      note("cj-irr mismatch at [" + l.label(iv.lo) + "," + l.label(iv.hi) + "]");
    if (cj_ni && cj_hi) {
      int hstar = irr_l.star_below(iv.hi);
      if (iv.lo != iv.hi && iv.lo != hstar)
        note("cj-irr interval with unexpected lower endpoint [" + l.label(iv.lo) + "," +
             l.label(iv.hi) + "]");
      // cover-shape corollary: the unique element covered by the interval
      Interval expect = (iv.lo == iv.hi) ? Interval{hstar, iv.hi} : Interval{iv.lo, iv.lo};
      int star = irr_ni.star_below(e);
      if (bp.interval(star) != expect)
        note("cj-irr star shape wrong at [" + l.label(iv.lo) + "," + l.label(iv.hi) + "]");
    }
    bool cm_ni = irr_ni.is_cm(e);
    bool cm_lo = irr_l.is_cm(iv.lo);
    if (cm_ni != cm_lo)
      note("cm-irr mismatch at [" + l.label(iv.lo) + "," + l.label(iv.hi) + "]");
    if (cm_ni && cm_lo) {
      int lstar = irr_l.star_above(iv.lo);
      if (iv.lo != iv.hi && iv.hi != lstar)
        note("cm-irr interval with unexpected upper endpoint [" + l.label(iv.lo) + "," +
             l.label(iv.hi) + "]");
      Interval expect = (iv.lo == iv.hi) ? Interval{iv.lo, lstar} : Interval{iv.hi, iv.hi};
      int star = irr_ni.star_above(e);
      if (bp.interval(star) != expect)
        note("cm-irr star shape wrong at [" + l.label(iv.lo) + "," + l.label(iv.hi) + "]");
    }
  }
  return rep;
}

}  // namespace binuc
