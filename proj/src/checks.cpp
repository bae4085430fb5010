#include "binuc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "binuc/binuclear.hpp"
#include "binuc/io.hpp"
#include "binuc/semidistrib.hpp"
#include "binuc/torsion.hpp"

namespace binuc {

using nlohmann::json;

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckItem& c) { return c.verdict != Verdict::fail; });
}

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::string ivl_str(const FinLattice& l, Interval i) {
  return "[" + l.label(i.lo) + "," + l.label(i.hi) + "]";
}

}  // namespace

json CheckReport::to_json() const {
  json j;
  j["target"] = target;
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["verdict"] = verdict_name(c.verdict);
    if (!c.witness.is_null()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << "target: " << target << "\n";
  int fails = 0;
  for (const auto& c : checks) {
    out << "  " << verdict_name(c.verdict) << "  " << c.name;
    if (c.verdict == Verdict::fail) {
      ++fails;
      out << "  " << c.witness.dump();
    }
    out << "\n";
  }
  out << (fails == 0 ? "all checks passed" : std::to_string(fails) + " check(s) failed");
  out << " (" << elapsed_ms << " ms)\n";
  return out.str();
}

namespace {

class SuiteRunner {
 public:
  explicit SuiteRunner(CheckReport& rep) : rep_(rep) {}

  // fn returns a witness json; null means pass
  template <typename F>
  void item(const std::string& name, F&& fn) {
    CheckItem c;
    c.name = name;
    try {
      json w = fn();
      c.verdict = w.is_null() ? Verdict::pass : Verdict::fail;
      c.witness = std::move(w);
    } catch (const Error& e) {
      c.verdict = Verdict::fail;
      c.witness = json{{"error", e.what()}};
    }
    rep_.checks.push_back(std::move(c));
  }

  void info(const std::string& name, json note) {
    rep_.checks.push_back({name, Verdict::pass, std::move(note)});
  }

  void skip(const std::string& name, const std::string& why) {
    rep_.checks.push_back({name, Verdict::skipped, json{{"note", why}}});
  }

 private:
  CheckReport& rep_;
};

// ------------------------------------------------------------------ lattice

void suite_lattice(SuiteRunner& r, const FinLattice& l) {
  r.item("lattice/axioms", [&]() -> json {
    auto v = is_lattice(l.poset());
    if (!v.ok)
      return json{{"pair", {l.label(v.witness->first), l.label(v.witness->second)}},
                  {"missing", v.missing_meet ? "meet" : "join"}};
    return nullptr;
  });

  r.item("lattice/covers-are-reduction", [&]() -> json {
    // re-derive the reduction from the order matrix
    std::vector<std::pair<int, int>> want;
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        if (a == b || !l.leq(a, b)) continue;
        bool between = false;
        for (int z = 0; z < l.size() && !between; ++z)
          between = z != a && z != b && l.leq(a, z) && l.leq(z, b);
        if (!between) want.emplace_back(a, b);
      }
    std::sort(want.begin(), want.end());
    if (want != l.covers()) return json{{"note", "stored covers differ from reduction"}};
    return nullptr;
  });

  r.item("lattice/bounds", [&]() -> json {
    std::vector<int> none;
    if (l.meet(none) != l.top() || l.join(none) != l.bottom())
      return json{{"note", "empty meet/join are not top/bottom"}};
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        int m = l.meet2(a, b);
        if (!l.leq(m, a) || !l.leq(m, b))
          return json{{"pair", {l.label(a), l.label(b)}}, {"note", "meet not a lower bound"}};
        for (int z = 0; z < l.size(); ++z)
          if (l.leq(z, a) && l.leq(z, b) && !l.leq(z, m))
            return json{{"pair", {l.label(a), l.label(b)}},
                        {"below", l.label(z)},
                        {"note", "meet not greatest"}};
      }
    return nullptr;
  });

  r.item("lattice/dot-roundtrip", [&]() -> json {
    std::string dot = export_dot(l.poset());
    // edges are lines of the form "upper" -> "lower";
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
      auto arrow = line.find("\" -> \"");
      if (arrow == std::string::npos) continue;
      auto q0 = line.find('"');
      std::string upper = line.substr(q0 + 1, arrow - q0 - 1);
      auto rest = arrow + 6;
      auto q1 = line.find('"', rest);
      std::string lower = line.substr(rest, q1 - rest);
      edges.emplace_back(lower, upper);
    }
    std::vector<std::pair<std::string, std::string>> want;
    for (auto [lo, hi] : l.covers()) want.emplace_back(l.label(lo), l.label(hi));
    std::sort(edges.begin(), edges.end());
    std::sort(want.begin(), want.end());
    if (edges != want) return json{{"note", "DOT edges do not reproduce the cover list"}};
    return nullptr;
  });
}

// ---------------------------------------------------------------- binuclear

void suite_binuclear(SuiteRunner& r, const FinLattice& l) {
  r.item("binuclear/remark-families", [&]() -> json {
    for (int x = 0; x < l.size(); ++x)
      if (!classify_interval(l, {x, x}).binuclear())
        return json{{"interval", ivl_str(l, {x, x})}, {"note", "singleton not binuclear"}};
    for (auto [a, b] : l.covers())
      if (!classify_interval(l, {a, b}).binuclear())
        return json{{"interval", ivl_str(l, {a, b})}, {"note", "cover not binuclear"}};
    return nullptr;
  });

  r.item("binuclear/duality", [&]() -> json {
    // [x,y] binuclear in the reversed lattice iff [y,x] is binuclear here
    FinLattice rev = l.reversed();
    auto fwd = binuclear_intervals(l);
    auto bwd = binuclear_intervals(rev);
    std::vector<Interval> back;
    for (Interval i : bwd) back.push_back({l.at(rev.label(i.hi)), l.at(rev.label(i.lo))});
    std::sort(back.begin(), back.end());
    if (back != fwd) return json{{"note", "binuclear intervals are not self-dual"}};
    return nullptr;
  });

  bool binuclear = is_binuclear_lattice(l).ok;
  r.item("binuclear/lattice-verdict", [&]() -> json {
    auto v = is_binuclear_lattice(l);
    if (!v.ok)
      return json{{"interval", ivl_str(l, *v.witness)},
                  {"side", v.witness_nuclear ? "nuclear only" : "conuclear only"}};
    return nullptr;
  });

  NiContext ctx(l);
  r.item("binuclear/ni-order", [&]() -> json {
    for (int a = 0; a < int(ctx.poset.intervals.size()); ++a)
      for (int b = 0; b < int(ctx.poset.intervals.size()); ++b) {
        Interval x = ctx.poset.interval(a), y = ctx.poset.interval(b);
        bool raw = l.leq(x.lo, y.lo) && l.leq(x.hi, y.hi);
        if (raw != ctx.poset.order.leq(a, b))
          return json{{"pair", {ivl_str(l, x), ivl_str(l, y)}},
                      {"note", "matrix disagrees with the definition"}};
      }
    return nullptr;
  });

  if (!binuclear) {
    r.skip("binuclear/ni-meets", "base lattice is not binuclear");
    r.skip("binuclear/ni-joins", "base lattice is not binuclear");
  } else {
    r.item("binuclear/ni-meets", [&]() -> json {
      for (Interval i : ctx.poset.intervals)
        for (Interval j : ctx.poset.intervals) {
          auto m = ni_meet(ctx, i, j);
          if (!m.exists)
            return json{{"pair", {ivl_str(l, i), ivl_str(l, j)}},
                        {"candidate", ivl_str(l, m.candidate)},
                        {"witness", ivl_str(l, m.witness)}};
        }
      return nullptr;
    });
    r.item("binuclear/ni-joins", [&]() -> json {
      for (Interval i : ctx.poset.intervals)
        for (Interval j : ctx.poset.intervals) {
          auto m = ni_join(ctx, i, j);
          if (!m.exists)
            return json{{"pair", {ivl_str(l, i), ivl_str(l, j)}},
                        {"candidate", ivl_str(l, m.candidate)},
                        {"witness", ivl_str(l, m.witness)}};
        }
      return nullptr;
    });
  }

  r.item("binuclear/bez", [&]() -> json {
    auto v = check_bez(ctx.poset.order);
    if (!v.ok) {
      auto [x, y, z] = *v.witness;
      return json{{"triple",
                   {ctx.poset.order.label(x), ctx.poset.order.label(y), ctx.poset.order.label(z)}}};
    }
    return nullptr;
  });
}

// ----------------------------------------------------------------------- sd

void suite_semidistributive(SuiteRunner& r, const FinLattice& l) {
  r.item("sd/base-lattice", [&]() -> json {
    auto v = check_semidistributivity(l);
    if (v.meet_sd && v.join_sd) return nullptr;
    json w;
    if (v.meet_witness) {
      auto [x, y, z] = *v.meet_witness;
      w["meet"] = {l.label(x), l.label(y), l.label(z)};
    }
    if (v.join_witness) {
      auto [x, y, z] = *v.join_witness;
      w["join"] = {l.label(x), l.label(y), l.label(z)};
    }
    return w;
  });

  BinucPoset bp = build_ni_order(l);
  if (!is_lattice(bp.order).ok) {
    r.skip("sd/binuc-order", "binuclear interval order is not a lattice");
    return;
  }
  FinLattice ni = FinLattice::from_poset(bp.order);
  bool base_sd = check_semidistributivity(l).meet_sd && check_semidistributivity(l).join_sd;
  r.item("sd/binuc-order", [&]() -> json {
    auto v = check_semidistributivity(ni);
    if (base_sd && (!v.meet_sd || !v.join_sd))
      return json{{"note", "semidistributivity failed to pass to the interval order"}};
    return nullptr;
  });
}

// -------------------------------------------------------------------- kappa

void suite_kappa(SuiteRunner& r, const FinLattice& l) {
  auto sd = check_semidistributivity(l);
  bool is_sd = sd.meet_sd && sd.join_sd;

  {
    auto f = check_kappa_properties(l);
    json flags{{"spatial", f.spatial},
               {"co_spatial", f.co_spatial},
               {"weak_meet_kappa", f.weak_meet_kappa},
               {"meet_kappa", f.meet_kappa},
               {"weak_join_kappa", f.weak_join_kappa},
               {"join_kappa", f.join_kappa},
               {"well_separated", f.well_separated},
               {"meet_sd", sd.meet_sd},
               {"join_sd", sd.join_sd}};
    r.info("kappa/flags", json{{"lattice", l.name()}, {"flags", flags}, {"witnesses", f.notes}});
  }

  r.item("kappa/properties", [&]() -> json {
    auto f = check_kappa_properties(l);
    if (!f.spatial || !f.co_spatial)
      return json{{"note", "finite lattice must be spatial and co-spatial"}, {"details", f.notes}};
    // finite equivalences between the kappa conditions and semidistributivity
    if (f.meet_kappa != f.weak_meet_kappa || f.meet_kappa != sd.meet_sd)
      return json{{"note", "meet-side kappa flags disagree"}, {"details", f.notes}};
    if (f.join_kappa != f.weak_join_kappa || f.join_kappa != sd.join_sd)
      return json{{"note", "join-side kappa flags disagree"}, {"details", f.notes}};
    if (is_sd && !f.well_separated)
      return json{{"note", "finite semidistributive lattice must be well-separated"},
                  {"details", f.notes}};
    return nullptr;
  });

  if (!is_sd) {
    r.skip("kappa/bijection", "lattice is not semidistributive");
  } else {
    r.item("kappa/bijection", [&]() -> json {
      auto irr = irreducibles(l);
      if (irr.cj.size() != irr.cm.size())
        return json{{"note", "irreducible counts differ"},
                    {"cj", irr.cj.size()},
                    {"cm", irr.cm.size()}};
      std::vector<int> images;
      for (auto& [j, jstar] : irr.cj) {
        auto k = kappa(l, j);
        if (!k.value) return json{{"at", l.label(j)}, {"note", "kappa undefined"}};
        int m = *k.value;
        if (!irr.is_cm(m)) return json{{"at", l.label(j)}, {"note", "image not cm-irreducible"}};
        if (l.meet2(j, m) != jstar)
          return json{{"at", l.label(j)}, {"note", "j ∧ κ(j) is not j_*"}};
        if (l.join2(j, m) != irr.star_above(m))
          return json{{"at", l.label(j)}, {"note", "j ∨ κ(j) is not κ(j)^*"}};
        auto back = kappa_dual(l, m);
        if (!back.value || *back.value != j)
          return json{{"at", l.label(j)}, {"note", "kappa_dual does not invert kappa"}};
        images.push_back(m);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return json{{"note", "kappa is not injective"}};
      return nullptr;
    });
  }

  BinucPoset bp = build_ni_order(l);
  bool ni_lattice = is_lattice(bp.order).ok;
  if (!is_sd || !ni_lattice) {
    r.skip("kappa/interval-order", is_sd ? "binuclear interval order is not a lattice"
                                         : "lattice is not semidistributive");
    r.skip("kappa/cjirr-characterization", "preconditions not met");
  } else {
    r.item("kappa/interval-order", [&]() -> json {
      kappa_ni(l);  // throws Mismatch / PreconditionFailed on failure
      return nullptr;
    });
    r.item("kappa/cjirr-characterization", [&]() -> json {
      auto rep = verify_cjirr_binuc(l);
      if (!rep.ok) return json{{"failures", rep.failures}};
      return nullptr;
    });
  }
}

// ------------------------------------------------------------------ torsion

void suite_torsion(SuiteRunner& r, const TorsData& t) {
  const AlgebraSpec& a = t.spec;

  r.item("tors/spec-invariants", [&]() -> json {
    a.validate();
    return nullptr;
  });

  r.item("tors/enumeration", [&]() -> json {
    for (int e = 0; e < t.lattice.size(); ++e)
      if (!is_torsion_class(a, t.class_of[e]))
        return json{{"class", a.subcat_label(t.class_of[e])}, {"note", "not closed"}};
    if (!t.class_of[t.lattice.bottom()].empty()) return json{{"note", "bottom is not zero"}};
    if (t.class_of[t.lattice.top()] != Subcat::all(a.size()))
      return json{{"note", "top is not the whole category"}};
    for (int x = 0; x < t.lattice.size(); ++x)
      for (int y = 0; y < t.lattice.size(); ++y)
        if (t.lattice.leq(x, y) != t.class_of[x].subset_of(t.class_of[y]))
          return json{{"note", "order is not inclusion"}};
    return nullptr;
  });

  r.item("tors/meet-is-intersection", [&]() -> json {
    for (int x = 0; x < t.lattice.size(); ++x)
      for (int y = 0; y < t.lattice.size(); ++y)
        if (t.class_of[t.lattice.meet2(x, y)] != t.class_of[x].intersect(t.class_of[y]))
          return json{{"pair", {t.lattice.label(x), t.lattice.label(y)}}};
    return nullptr;
  });

  r.item("tors/nuclear-equals-conuclear", [&]() -> json {
    auto v = is_binuclear_lattice(t.lattice);
    if (!v.ok)
      return json{{"interval", ivl_str(t.lattice, *v.witness)},
                  {"side", v.witness_nuclear ? "nuclear only" : "conuclear only"}};
    return nullptr;
  });

  r.item("tors/closure-and-perp", [&]() -> json {
    if (!tors_closure(a, Subcat::none()).empty()) return json{{"note", "closure of 0 is not 0"}};
    if (tors_closure(a, Subcat::all(a.size())) != Subcat::all(a.size()))
      return json{{"note", "closure of everything shrank"}};
    if (left_perp(a, Subcat::none()) != Subcat::all(a.size()))
      return json{{"note", "perp of 0 is not everything"}};
    Subcat simples;
    for (int x = 0; x < a.size(); ++x) {
      int total = 0;
      for (int d : a.indec[x].dim) total += d;
      if (total == 1) simples.add(x);
    }
    if (!left_perp(a, simples).empty())
      return json{{"note", "perp of the simples is not 0"}};
    return nullptr;
  });

  r.item("tors/bricks-kappa", [&]() -> json {
    bricks_and_kappa(t);  // throws BijectionFailure with a witness
    return nullptr;
  });

  r.item("tors/heart-brick-per-cover", [&]() -> json {
    // covers carry exactly one brick in their heart
    for (auto [x, y] : t.lattice.covers()) {
      Subcat h = heart(t, {x, y});
      if (h.count() != 1)
        return json{{"cover", {t.lattice.label(x), t.lattice.label(y)}},
                    {"heart", a.subcat_label(h)}};
      if (a.indec[h.members()[0]].end_dim != 1)
        return json{{"cover", {t.lattice.label(x), t.lattice.label(y)}},
                    {"note", "heart module is not a brick"}};
    }
    return nullptr;
  });

  r.item("tors/restriction", [&]() -> json {
    for (Interval i : binuclear_intervals(t.lattice)) {
      auto rep = res_interval(t, i);
      if (!rep.ok)
        return json{{"interval", ivl_str(t.lattice, i)}, {"failures", rep.failures}};
    }
    return nullptr;
  });

  r.item("tors/cw-partition", [&]() -> json {
    auto rep = cw_partition(t);
    if (!rep.ok) return json{{"failures", rep.failures}};
    return nullptr;
  });
}

// ---------------------------------------------------------------------- fss

void suite_fss(SuiteRunner& r, const TorsData& t, std::uint64_t seed) {
  const AlgebraSpec& a = t.spec;
  std::optional<FssContext> maybe_ctx;

  r.item("fss/presilting-bijection", [&]() -> json {
    maybe_ctx.emplace(t);  // construction asserts the pair <-> interval bijection
    return nullptr;
  });
  if (!maybe_ctx) {
    for (const char* name : {"fss/cones", "fss/cover-classification", "fss/theta-zero",
                             "fss/chamber-interiors", "fss/theta-sampling",
                             "fss/hasse-vs-incidence"})
      r.skip(name, "presilting enumeration failed");
    return;
  }
  const FssContext& ctx = *maybe_ctx;
  r.info("fss/presilting-count", json{{"pairs", ctx.presilting.size()}});

  r.item("fss/cones", [&]() -> json {
    for (const auto& e : ctx.presilting) cone_data(ctx, e.interval);
    return nullptr;
  });

  r.item("fss/cover-classification", [&]() -> json {
    auto rep = fss_cover_check(ctx);
    if (!rep.ok) return json{{"failures", rep.failures}};
    return nullptr;
  });

  r.item("fss/theta-zero", [&]() -> json {
    Interval iv = tf_interval(t, StabilityVector::zero(a.rank));
    if (iv.lo != t.lattice.bottom() || iv.hi != t.lattice.top())
      return json{{"interval", ivl_str(t.lattice, iv)}};
    return nullptr;
  });

  r.item("fss/chamber-interiors", [&]() -> json {
    for (const auto& e : ctx.presilting) {
      if (e.pair.modules.count() + e.pair.shifted_projectives.count() != a.rank) continue;
      StabilityVector theta = StabilityVector::zero(a.rank);
      for (int x : e.pair.modules.members())
        for (int k = 0; k < a.rank; ++k) theta.num[k] += a.indec[x].g[k];
      for (int q : e.pair.shifted_projectives.members())
        for (int k = 0; k < a.rank; ++k) theta.num[k] -= a.indec[q].g[k];
      Interval iv = tf_interval(t, theta);
      if (iv != e.interval)
        return json{{"chamber", ivl_str(t.lattice, e.interval)},
                    {"got", ivl_str(t.lattice, iv)}};
    }
    return nullptr;
  });

  r.item("fss/theta-sampling", [&]() -> json {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::uniform_int_distribution<long long> denom(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
      StabilityVector theta;
      theta.den = denom(rng);
      for (int k = 0; k < a.rank; ++k) theta.num.push_back(coeff(rng));
      Interval iv = tf_interval(t, theta);  // throws if not binuclear
      if (!t.lattice.leq(iv.lo, iv.hi)) return json{{"trial", trial}};
    }
    return nullptr;
  });

  auto diff = hasse_vs_incidence(ctx);
  json dj;
  dj["hasse_only"] = json::array();
  for (auto& [x, y] : diff.hasse_only)
    dj["hasse_only"].push_back({ivl_str(t.lattice, x), ivl_str(t.lattice, y)});
  dj["incidence_only"] = json::array();
  for (auto& [x, y] : diff.incidence_only)
    dj["incidence_only"].push_back({ivl_str(t.lattice, x), ivl_str(t.lattice, y)});
  r.info("fss/hasse-vs-incidence", dj);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lattice", "binuclear", "semidistributive", "kappa", "torsion", "fss", "all"};
  return names;
}

CheckReport run_suite(const CheckInput& input, const std::string& suite, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    fail(Errc::bad_params, "unknown suite '" + suite + "'");

  CheckReport rep;
  rep.target = input.target;
  SuiteRunner r(rep);
  auto t0 = std::chrono::steady_clock::now();

  std::optional<TorsData> tors;
  const FinLattice* l = nullptr;
  if (input.algebra) {
    tors = enumerate_tors(*input.algebra);
    l = &tors->lattice;
  } else if (input.lattice) {
    l = &*input.lattice;
  } else {
    fail(Errc::bad_params, "no input");
  }

  bool all = suite == "all";
  if (all || suite == "lattice") suite_lattice(r, *l);
  if (all || suite == "binuclear") suite_binuclear(r, *l);
  if (all || suite == "semidistributive") suite_semidistributive(r, *l);
  if (all || suite == "kappa") suite_kappa(r, *l);
  if (all || suite == "torsion") {
    if (tors)
      suite_torsion(r, *tors);
    else
      r.skip("torsion", "input is a bare lattice");
  }
  if (all || suite == "fss") {
    if (tors)
      suite_fss(r, *tors, seed);
    else
      r.skip("fss", "input is a bare lattice");
  }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace binuc
