#include "binuc/torsion.hpp"

#include <algorithm>
#include <cstdlib>

#include "binuc/semidistrib.hpp"

namespace binuc {

int max_indec_cap() {
  if (const char* env = std::getenv("BINUC_MAX_INDEC")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 20;
}

Subcat quotient_closure(const AlgebraSpec& a, Subcat s) {
  Subcat out = s;
  for (int x : s.members()) out = out.unite(a.indec[x].quotients);
  return out;
}

namespace {

bool multiset_in(const std::vector<int>& xs, Subcat s) {
  for (int x : xs)
    if (!s.contains(x)) return false;
  return true;
}

Subcat extension_step(const AlgebraSpec& a, Subcat s) {
  Subcat out = s;
  for (const Ses& q : a.ses)
    if (multiset_in(q.sub, s) && multiset_in(q.quot, s))
      for (int x : q.mid) out.add(x);
  return out;
}

}  // namespace

Subcat tors_closure(const AlgebraSpec& a, Subcat s) {
  Subcat cur = s;
  for (;;) {
    Subcat next = extension_step(a, quotient_closure(a, cur));
    if (next == cur) return cur;
    cur = next;
  }
}

bool is_torsion_class(const AlgebraSpec& a, Subcat s) {
  return quotient_closure(a, s) == s && extension_step(a, s) == s;
}

Subcat left_perp(const AlgebraSpec& a, Subcat s) {
  Subcat out;
  for (int x = 0; x < a.size(); ++x) {
    bool maps = false;
    for (int y : s.members())
      if (a.hom.get(x, y)) { maps = true; break; }
    if (!maps) out.add(x);
  }
  if (!is_torsion_class(a, out))
    fail(Errc::closure_violation,
         "left perp of " + a.subcat_label(s) + " is not a torsion class (bad input data)");
  return out;
}

std::optional<int> TorsData::find(Subcat s) const {
  for (int e = 0; e < lattice.size(); ++e)
    if (class_of[e] == s) return e;
  return std::nullopt;
}

int TorsData::element_for(Subcat s) const {
  auto e = find(s);
  if (!e)
    fail(Errc::not_a_torsion_class, spec.subcat_label(s) + " is not a torsion class of '" +
                                        spec.name + "'");
  return *e;
}

TorsData enumerate_tors(const AlgebraSpec& spec) {
  spec.validate();
  if (spec.size() > max_indec_cap())
    fail(Errc::too_large, "'" + spec.name + "' has " + std::to_string(spec.size()) +
                              " indecomposables; cap is " + std::to_string(max_indec_cap()));

  // closure-driven search: every torsion class is reached from a smaller one
  // by closing off one more indecomposable.
  std::vector<Subcat> classes{Subcat::none()};
  std::unordered_map<std::uint64_t, bool> seen{{0, true}};
  for (size_t k = 0; k < classes.size(); ++k) {
    Subcat t = classes[k];
    for (int x = 0; x < spec.size(); ++x) {
      if (t.contains(x)) continue;
      Subcat u = t;
      u.add(x);
      u = tors_closure(spec, u);
      if (!seen.emplace(u.bits, true).second) continue;
      classes.push_back(u);
    }
  }

  std::sort(classes.begin(), classes.end(),
            [](Subcat a, Subcat b) { return a.bits < b.bits; });
  const int n = int(classes.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = spec.subcat_label(classes[i]);
  BitMatrix leq(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (classes[i].subset_of(classes[j])) leq.set(i, j);

  TorsData t{spec, FinLattice::from_leq("tors-" + spec.name, labels, leq), {}};
  t.class_of.resize(n);
  for (int i = 0; i < n; ++i) t.class_of[t.lattice.at(labels[i])] = classes[i];
  return t;
}

Subcat heart(const TorsData& t, Interval i) {
  if (!t.lattice.leq(i.lo, i.hi))
    fail(Errc::not_comparable, "interval endpoints are not comparable");
  Subcat lo = t.class_of[i.lo], hi = t.class_of[i.hi];
  Subcat out;
  for (int x : hi.members()) {
    bool maps = false;
    for (int s : lo.members())
      if (t.spec.hom.get(s, x)) { maps = true; break; }
    if (!maps) out.add(x);
  }
  return out;
}

namespace {

// Subsets of `universe` closed under the restricted quotient and extension
// predicates; this is the torsion-class enumeration of the heart viewed as an
// abelian category in its own right.
std::vector<Subcat> closed_subsets_within(const AlgebraSpec& a, Subcat universe) {
  auto close = [&](Subcat s) {
    Subcat cur = s;
    for (;;) {
      Subcat next = cur;
      for (int x : cur.members()) next = next.unite(a.indec[x].quotients.intersect(universe));
      for (const Ses& q : a.ses) {
        if (!multiset_in(q.sub, next) || !multiset_in(q.quot, next)) continue;
        bool mid_inside = multiset_in(q.mid, universe);
        if (mid_inside)
          for (int x : q.mid) next.add(x);
      }
      if (next == cur) return cur;
      cur = next;
    }
  };
  std::vector<Subcat> out{Subcat::none()};
  std::unordered_map<std::uint64_t, bool> seen{{0, true}};
  for (size_t k = 0; k < out.size(); ++k) {
    Subcat t = out[k];
    for (int x : universe.members()) {
      if (t.contains(x)) continue;
      Subcat u = t;
      u.add(x);
      u = close(u);
      if (!u.subset_of(universe)) continue;
      if (!seen.emplace(u.bits, true).second) continue;
      out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), [](Subcat a, Subcat b) { return a.bits < b.bits; });
  return out;
}

}  // namespace

ResReport res_interval(const TorsData& t, Interval i) {
  ResReport rep;
  auto cls = classify_interval(t.lattice, i);
  if (!cls.binuclear())
    fail(Errc::not_binuclear, "restriction needs a binuclear interval");
  const AlgebraSpec& a = t.spec;
  Subcat w = heart(t, i);
  Subcat lo = t.class_of[i.lo];

  auto note = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  rep.image = closed_subsets_within(a, w);
  {
    const int n = int(rep.image.size());
    std::vector<std::string> labels(n);
    BitMatrix leq(n);
    for (int x = 0; x < n; ++x) {
      labels[x] = a.subcat_label(rep.image[x]);
      for (int y = 0; y < n; ++y)
        if (rep.image[x].subset_of(rep.image[y])) leq.set(x, y);
    }
    rep.image_lattice = FinLattice::from_leq("res-" + a.subcat_label(w), labels, leq);
  }

  // elements of the lattice interval [lo, hi]
  std::vector<int> ivl_elems;
  for (int e = 0; e < t.lattice.size(); ++e)
    if (t.lattice.leq(i.lo, e) && t.lattice.leq(e, i.hi)) ivl_elems.push_back(e);

  if (ivl_elems.size() != rep.image.size())
    note("interval has " + std::to_string(ivl_elems.size()) + " classes, heart has " +
         std::to_string(rep.image.size()));

  std::unordered_map<std::uint64_t, int> res_of;  // restricted class -> interval element
  for (int e : ivl_elems) {
    Subcat r = t.class_of[e].intersect(w);
    if (std::find(rep.image.begin(), rep.image.end(), r) == rep.image.end())
      note("restriction of " + a.subcat_label(t.class_of[e]) + " is not a torsion class of the heart");
    if (!res_of.emplace(r.bits, e).second)
      note("restriction is not injective at " + a.subcat_label(t.class_of[e]));
  }
  // order isomorphism in both directions
  for (int e1 : ivl_elems)
    for (int e2 : ivl_elems) {
      bool lhs = t.lattice.leq(e1, e2);
      bool rhs = t.class_of[e1].intersect(w).subset_of(t.class_of[e2].intersect(w));
      if (lhs != rhs)
        note("restriction does not preserve and reflect order at (" +
             a.subcat_label(t.class_of[e1]) + ", " + a.subcat_label(t.class_of[e2]) + ")");
    }

  // star-product inverse: T' = lo * res(T'), membership checked through the
  // sequences with indecomposable middle.
  for (int e : ivl_elems) {
    Subcat u = t.class_of[e].intersect(w);
    Subcat star = lo.unite(u);
    for (const Ses& q : a.ses) {
      if (q.mid.size() != 1) continue;
      if (multiset_in(q.sub, lo) && multiset_in(q.quot, u)) star.add(q.mid[0]);
    }
    if (star != t.class_of[e])
      note("star product does not recover " + a.subcat_label(t.class_of[e]));
  }
  return rep;
}

const CwBlock* CwReport::block_of(Subcat w) const {
  for (const auto& b : blocks)
    if (b.heart_subcat == w) return &b;
  return nullptr;
}

CwReport cw_partition(const TorsData& t) {
  CwReport rep;
  auto note = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  BinucPoset bp = build_ni_order(t.lattice);
  const int m = int(bp.intervals.size());
  std::vector<Subcat> heart_of(m);
  for (int k = 0; k < m; ++k) heart_of[k] = heart(t, bp.intervals[k]);

  std::vector<std::uint64_t> heart_keys;
  for (int k = 0; k < m; ++k) heart_keys.push_back(heart_of[k].bits);
  std::sort(heart_keys.begin(), heart_keys.end());
  heart_keys.erase(std::unique(heart_keys.begin(), heart_keys.end()), heart_keys.end());

  for (std::uint64_t wbits : heart_keys) {
    Subcat w{wbits};
    CwBlock block;
    block.heart_subcat = w;
    for (int k = 0; k < m; ++k)
      if (heart_of[k] == w) block.intervals.push_back(bp.interval(k));
    std::sort(block.intervals.begin(), block.intervals.end());

    // convexity of the enclosing set {I : w subset of heart(I)}
    std::vector<char> bar(m, 0);
    for (int k = 0; k < m; ++k) bar[k] = w.subset_of(heart_of[k]);
    for (int j = 0; j < m; ++j) {
      if (bar[j]) continue;
      bool has_below = false, has_above = false;
      for (int k = 0; k < m; ++k) {
        if (!bar[k]) continue;
        has_below |= bp.order.leq(k, j);
        has_above |= bp.order.leq(j, k);
      }
      if (has_below && has_above) {
        note("enclosing set of " + t.spec.subcat_label(w) + " is not convex at element " +
             bp.order.label(j));
        break;
      }
    }

    // closure under componentwise endpoint meets/joins, inside the block
    auto endpoint_closed = [&]() {
      for (const Interval& x : block.intervals)
        for (const Interval& y : block.intervals) {
          Interval cm{t.lattice.meet2(x.lo, y.lo), t.lattice.meet2(x.hi, y.hi)};
          Interval cj{t.lattice.join2(x.lo, y.lo), t.lattice.join2(x.hi, y.hi)};
          for (Interval cand : {cm, cj}) {
            int k = bp.index_of(cand);
            if (k < 0 || heart_of[k] != w) return false;
          }
        }
      return true;
    };
    if (!endpoint_closed())
      note("block of " + t.spec.subcat_label(w) + " is not closed under componentwise bounds");

    // each block is a semidistributive lattice under the restricted order
    {
      const int bn = int(block.intervals.size());
      std::vector<std::string> labels(bn);
      BitMatrix leq(bn);
      for (int x = 0; x < bn; ++x) {
        labels[x] = "[" + t.lattice.label(block.intervals[x].lo) + "," +
                    t.lattice.label(block.intervals[x].hi) + "]";
        for (int y = 0; y < bn; ++y)
          if (t.lattice.leq(block.intervals[x].lo, block.intervals[y].lo) &&
              t.lattice.leq(block.intervals[x].hi, block.intervals[y].hi))
            leq.set(x, y);
      }
      try {
        FinLattice bl = FinLattice::from_leq("block", labels, leq);
        auto sd = check_semidistributivity(bl);
        if (!sd.meet_sd || !sd.join_sd)
          note("block of " + t.spec.subcat_label(w) + " is not semidistributive");
      } catch (const Error& e) {
        note("block of " + t.spec.subcat_label(w) + " is not a lattice: " + e.what());
      }
    }
    rep.blocks.push_back(std::move(block));
  }

  // the empty-heart block consists of the singletons and mirrors the lattice
  const CwBlock* zero = rep.block_of(Subcat::none());
  if (!zero) {
    note("no empty-heart block");
  } else {
    if (int(zero->intervals.size()) != t.lattice.size())
      note("empty-heart block has wrong size");
    for (const Interval& iv : zero->intervals)
      if (iv.lo != iv.hi) note("empty-heart block contains a non-singleton interval");
  }

  size_t total = 0;
  for (const auto& b : rep.blocks) total += b.intervals.size();
  if (total != size_t(m)) note("blocks do not partition the binuclear intervals");
  return rep;
}

BricksKappaReport bricks_and_kappa(const TorsData& t) {
  BricksKappaReport rep;
  const AlgebraSpec& a = t.spec;
  for (int x = 0; x < a.size(); ++x)
    if (a.indec[x].end_dim == 1) rep.bricks.push_back(x);

  auto irr = irreducibles(t.lattice);
  auto fail_with = [&](const std::string& msg) { fail(Errc::bijection_failure, msg); };

  std::vector<int> cj_hits, cm_hits;
  for (int x : rep.bricks) {
    Subcat tx = tors_closure(a, Subcat::single(x));
    auto e = t.find(tx);
    if (!e) fail_with("T(" + a.indec[x].id + ") is not a torsion class");
    if (!irr.is_cj(*e))
      fail_with("T(" + a.indec[x].id + ") is not completely join-irreducible");
    rep.brick_to_cj.emplace_back(x, *e);
    cj_hits.push_back(*e);

    Subcat px = left_perp(a, Subcat::single(x));
    auto f = t.find(px);
    if (!f) fail_with("perp(" + a.indec[x].id + ") is not a torsion class");
    if (!irr.is_cm(*f))
      fail_with("perp(" + a.indec[x].id + ") is not completely meet-irreducible");
    rep.brick_to_cm.emplace_back(x, *f);
    cm_hits.push_back(*f);

    auto k = kappa(t.lattice, *e);
    if (!k.value || *k.value != *f)
      fail_with("kappa(T(" + a.indec[x].id + ")) differs from perp(" + a.indec[x].id + ")");
  }

  std::sort(cj_hits.begin(), cj_hits.end());
  if (std::adjacent_find(cj_hits.begin(), cj_hits.end()) != cj_hits.end())
    fail_with("brick-to-join-irreducible map is not injective");
  if (cj_hits.size() != irr.cj.size())
    fail_with("brick-to-join-irreducible map is not surjective");
  std::sort(cm_hits.begin(), cm_hits.end());
  if (std::adjacent_find(cm_hits.begin(), cm_hits.end()) != cm_hits.end())
    fail_with("brick-to-meet-irreducible map is not injective");
  if (cm_hits.size() != irr.cm.size())
    fail_with("brick-to-meet-irreducible map is not surjective");
  return rep;
}

long long StabilityVector::dot_num(const std::vector<int>& dim) const {
  long long s = 0;
  for (size_t k = 0; k < num.size() && k < dim.size(); ++k) s += num[k] * dim[k];
  return s;
}

Interval tf_interval(const TorsData& t, const StabilityVector& theta) {
  const AlgebraSpec& a = t.spec;
  if (int(theta.num.size()) != a.rank || theta.den <= 0)
    fail(Errc::bad_params, "stability vector has wrong arity or nonpositive denominator");
  Subcat strict, weak;
  for (int x = 0; x < a.size(); ++x) {
    bool all_pos = true, all_nonneg = true;
    for (int q : a.indec[x].quotients.members()) {
      long long d = theta.dot_num(a.indec[q].dim);
      all_pos &= d > 0;
      all_nonneg &= d >= 0;
    }
    if (all_pos) strict.add(x);
    if (all_nonneg) weak.add(x);
  }
  Interval iv{t.element_for(strict), t.element_for(weak)};
  if (!classify_interval(t.lattice, iv).binuclear())
    fail(Errc::not_binuclear, "semistable interval is not binuclear (bad spec data)");
  return iv;
}

std::vector<PresiltEntry> enumerate_presilting(const TorsData& t) {
  const AlgebraSpec& a = t.spec;
  const int n = a.size();

  // pairwise tau-compatibility: Hom(X, tau Y) = 0 = Hom(Y, tau X), and no
  // self-map to the translate
  auto self_ok = [&](int x) { return !a.indec[x].tau || !a.hom.get(x, *a.indec[x].tau); };
  auto compat = [&](int x, int y) {
    if (a.indec[y].tau && a.hom.get(x, *a.indec[y].tau)) return false;
    if (a.indec[x].tau && a.hom.get(y, *a.indec[x].tau)) return false;
    return true;
  };

  std::vector<Subcat> rigid{Subcat::none()};
  // depth-first extension by increasing index keeps each subset visited once
  std::vector<std::pair<Subcat, int>> stack{{Subcat::none(), 0}};
  while (!stack.empty()) {
    auto [m, next] = stack.back();
    stack.pop_back();
    for (int x = next; x < n; ++x) {
      if (!self_ok(x)) continue;
      bool ok = true;
      for (int y : m.members())
        if (!compat(x, y)) { ok = false; break; }
      if (!ok) continue;
      Subcat mx = m;
      mx.add(x);
      rigid.push_back(mx);
      stack.emplace_back(mx, x + 1);
    }
  }

  std::vector<PresiltEntry> out;
  Subcat projs = a.projectives();
  for (Subcat m : rigid) {
    // projectives with no maps into add(M), excluding M itself
    std::vector<int> allowed;
    for (int q : projs.members()) {
      if (m.contains(q)) continue;
      bool maps = false;
      for (int x : m.members())
        if (a.hom.get(q, x)) { maps = true; break; }
      if (!maps) allowed.push_back(q);
    }
    const int an = int(allowed.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << an); ++mask) {
      Subcat p;
      for (int b = 0; b < an; ++b)
        if (mask & (std::uint64_t(1) << b)) p.add(allowed[b]);
      PresiltEntry e;
      e.pair = {m, p};
      Subcat lo = tors_closure(a, m);
      Subcat hi = Subcat::all(n);
      for (int y : m.members())
        if (a.indec[y].tau) {
          Subcat keep;
          for (int x = 0; x < n; ++x)
            if (!a.hom.get(x, *a.indec[y].tau)) keep.add(x);
          hi = hi.intersect(keep);
        }
      for (int q : p.members()) {
        Subcat keep;
        for (int x = 0; x < n; ++x)
          if (!a.hom.get(q, x)) keep.add(x);
        hi = hi.intersect(keep);
      }
      auto elo = t.find(lo), ehi = t.find(hi);
      if (!elo || !ehi)
        fail(Errc::not_bijective, "presilting pair (" + a.subcat_label(m) + ", " +
                                      a.subcat_label(p) + ") yields a non-torsion-class endpoint");
      e.interval = {*elo, *ehi};
      out.push_back(e);
    }
  }

  // bijection onto the binuclear intervals
  auto binuc = binuclear_intervals(t.lattice);
  std::vector<Interval> got;
  for (const auto& e : out) {
    if (!t.lattice.leq(e.interval.lo, e.interval.hi) ||
        !classify_interval(t.lattice, e.interval).binuclear())
      fail(Errc::not_bijective, "presilting interval is not binuclear");
    got.push_back(e.interval);
  }
  std::sort(got.begin(), got.end());
  if (std::adjacent_find(got.begin(), got.end()) != got.end())
    fail(Errc::not_bijective, "two presilting pairs share an interval");
  if (got != binuc)
    fail(Errc::not_bijective, "presilting intervals do not exhaust the binuclear intervals (" +
                                  std::to_string(got.size()) + " vs " +
                                  std::to_string(binuc.size()) + ")");

  std::sort(out.begin(), out.end(), [](const PresiltEntry& x, const PresiltEntry& y) {
    if (x.interval != y.interval) return x.interval < y.interval;
    if (x.pair.modules.bits != y.pair.modules.bits)
      return x.pair.modules.bits < y.pair.modules.bits;
    return x.pair.shifted_projectives.bits < y.pair.shifted_projectives.bits;
  });
  return out;
}

FssContext::FssContext(const TorsData& t)
    : binuc(build_ni_order(t.lattice)), presilting(enumerate_presilting(t)), tors_(&t) {}

int FssContext::dim_of(Interval i) const {
  const TorsData& t = *tors_;
  int atoms = 0;
  for (int z : t.lattice.upper_covers(i.lo))
    if (t.lattice.leq(z, i.hi)) ++atoms;
  return t.spec.rank - atoms;
}

const PresiltEntry& FssContext::entry_for(Interval i) const {
  for (const auto& e : presilting)
    if (e.interval == i) return e;
  fail(Errc::bad_params, "interval has no matching presilting pair");
}

namespace {

int int_rank(std::vector<std::vector<long long>> rows) {
  int rank = 0;
  const int nc = rows.empty() ? 0 : int(rows[0].size());
  for (int col = 0; col < nc && rank < int(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < int(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      long long a = rows[rank][col], b = rows[r][col];
      for (int c = 0; c < nc; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ConeData cone_data(const FssContext& ctx, Interval i) {
  const TorsData& t = ctx.tors();
  ConeData c;
  c.dim = ctx.dim_of(i);
  const PresiltEntry& e = ctx.entry_for(i);
  for (int x : e.pair.modules.members()) c.generators.push_back(t.spec.indec[x].g);
  for (int q : e.pair.shifted_projectives.members()) {
    std::vector<int> neg = t.spec.indec[q].g;
    for (int& v : neg) v = -v;
    c.generators.push_back(neg);
  }
  if (int(c.generators.size()) != c.dim)
    fail(Errc::dependent_generators,
         "summand count disagrees with the atoms formula at interval [" +
             t.lattice.label(i.lo) + "," + t.lattice.label(i.hi) + "]");
  std::vector<std::vector<long long>> rows;
  for (auto& g : c.generators) rows.emplace_back(g.begin(), g.end());
  if (int_rank(rows) != int(rows.size()))
    fail(Errc::dependent_generators, "cone generators are linearly dependent at interval [" +
                                         t.lattice.label(i.lo) + "," + t.lattice.label(i.hi) +
                                         "]");
  return c;
}

ConeData cone_data(const TorsData& t, Interval i) {
  FssContext ctx(t);
  return cone_data(ctx, i);
}

FssCoverReport fss_cover_check(const FssContext& ctx) {
  const TorsData& t = ctx.tors();
  const FinLattice& l = t.lattice;
  FssCoverReport rep;
  auto note = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  const BinucPoset& bp = ctx.binuc;
  const int m = int(bp.intervals.size());
  std::vector<int> dim(m);
  for (int k = 0; k < m; ++k) dim[k] = ctx.dim_of(bp.interval(k));

  auto ivl_str = [&](Interval iv) {
    return "[" + l.label(iv.lo) + "," + l.label(iv.hi) + "]";
  };
  auto clause1 = [&](int a, int b) {  // equal tops, upper nested in lower, dim +1
    Interval x = bp.interval(a), y = bp.interval(b);
    return x.hi == y.hi && l.leq(x.lo, y.lo) && dim[b] - dim[a] == 1;
  };
  auto clause2 = [&](int a, int b) {  // equal bottoms, lower nested in upper, dim -1
    Interval x = bp.interval(a), y = bp.interval(b);
    return x.lo == y.lo && l.leq(x.hi, y.hi) && dim[a] - dim[b] == 1;
  };

  // every cover satisfies exactly one clause
  for (auto [a, b] : bp.order.covers()) {
    ++rep.covers_checked;
    bool c1 = clause1(a, b), c2 = clause2(a, b);
    if (c1 && c2)
      note("cover " + ivl_str(bp.interval(a)) + " < " + ivl_str(bp.interval(b)) +
           " satisfies both clauses");
    if (!c1 && !c2)
      note("cover " + ivl_str(bp.interval(a)) + " < " + ivl_str(bp.interval(b)) +
           " satisfies neither clause");
    if (c1 && !c2) ++rep.clause1;
    if (c2 && !c1) ++rep.clause2;
  }

  // conversely, every clause instance is a cover
  std::vector<std::vector<char>> is_cover(m, std::vector<char>(m, 0));
  for (auto [a, b] : bp.order.covers()) is_cover[a][b] = 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !bp.order.leq(a, b)) continue;
      if ((clause1(a, b) || clause2(a, b)) && !is_cover[a][b])
        note("clause pair " + ivl_str(bp.interval(a)) + " < " + ivl_str(bp.interval(b)) +
             " is not a cover");
    }

  // two-of-three laws relating nesting, shared endpoints, and the order
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Interval x = bp.interval(a), y = bp.interval(b);
      bool le = bp.order.leq(a, b);
      {
        bool nest = l.leq(x.lo, y.lo) && l.leq(y.hi, x.hi);  // y inside x
        bool top = x.hi == y.hi;
        if ((nest && top && !le) || (nest && le && !top) || (top && le && !nest)) {
          note("two-of-three (top side) fails at " + ivl_str(x) + ", " + ivl_str(y));
        }
      }
      {
        bool nest = l.leq(y.lo, x.lo) && l.leq(x.hi, y.hi);  // x inside y
        bool bot = x.lo == y.lo;
        if ((nest && bot && !le) || (nest && le && !bot) || (bot && le && !nest)) {
          note("two-of-three (bottom side) fails at " + ivl_str(x) + ", " + ivl_str(y));
        }
      }
    }
  return rep;
}

FssCoverReport fss_cover_check(const TorsData& t) {
  FssContext ctx(t);
  return fss_cover_check(ctx);
}

HasseDiffReport hasse_vs_incidence(const FssContext& ctx) {
  const TorsData& t = ctx.tors();
  const FinLattice& l = t.lattice;
  const BinucPoset& bp = ctx.binuc;
  const int m = int(bp.intervals.size());
  std::vector<int> dim(m);
  for (int k = 0; k < m; ++k) dim[k] = ctx.dim_of(bp.interval(k));

  auto nested = [&](Interval x, Interval y) {  // y inside x
    return l.leq(x.lo, y.lo) && l.leq(y.hi, x.hi);
  };

  std::vector<std::pair<int, int>> g1, g2;
  for (auto [a, b] : bp.order.covers()) g1.emplace_back(std::min(a, b), std::max(a, b));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Interval x = bp.interval(a), y = bp.interval(b);
      if ((nested(x, y) || nested(y, x)) && std::abs(dim[a] - dim[b]) == 1)
        g2.emplace_back(a, b);
    }
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());

  HasseDiffReport rep;
  std::vector<std::pair<int, int>> only;
  std::set_difference(g1.begin(), g1.end(), g2.begin(), g2.end(), std::back_inserter(only));
  for (auto [a, b] : only) rep.hasse_only.emplace_back(bp.interval(a), bp.interval(b));
  only.clear();
  std::set_difference(g2.begin(), g2.end(), g1.begin(), g1.end(), std::back_inserter(only));
  for (auto [a, b] : only) rep.incidence_only.emplace_back(bp.interval(a), bp.interval(b));
  return rep;
}

HasseDiffReport hasse_vs_incidence(const TorsData& t) {
  FssContext ctx(t);
  return hasse_vs_incidence(ctx);
}

}  // namespace binuc
