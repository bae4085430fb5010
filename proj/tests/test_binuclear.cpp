#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "binuc/binuclear.hpp"
#include "binuc/lattice.hpp"
#include "oracles.hpp"

using namespace binuc;

namespace {

Interval iv(const FinLattice& l, const char* lo, const char* hi) {
  return {l.at(lo), l.at(hi)};
}

const std::vector<FinLattice>& corpus() {
  static const std::vector<FinLattice> c = {
      generate("fig1"),       generate("fig2"),       generate("chain", 4),
      generate("boolean", 2), generate("boolean", 3), generate("diamond_m3"),
      generate("weak_order", 3)};
  return c;
}

}  // namespace

TEST_CASE("pop operators on the figure lattices") {
  FinLattice f1 = generate("fig1");
  CHECK(pop_down(f1, f1.bottom(), f1.top()) == f1.bottom());
  CHECK(pop_up(f1, f1.bottom(), f1.top()) == f1.at("y"));

  FinLattice f2 = generate("fig2");
  CHECK(pop_down(f2, f2.bottom(), f2.at("c")) == f2.bottom());
  CHECK(pop_up(f2, f2.at("i"), f2.at("c")) == f2.at("f"));

  for (int x = 0; x < f2.size(); ++x) {
    CHECK(pop_down(f2, x, x) == x);
    CHECK(pop_up(f2, x, x) == x);
  }
  CHECK_THROWS_WITH_AS(pop_down(f2, f2.at("a"), f2.at("b")), doctest::Contains("NotComparable"),
                       Error);
}

TEST_CASE("pop operators agree with the oracle on the corpus") {
  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    auto leq = oracle::leq_of(l.poset());
    auto covers = oracle::covers_of(leq);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        if (!l.leq(x, y)) continue;
        CHECK(pop_down(l, x, y) == oracle::pop_down(leq, covers, x, y));
        CHECK(pop_up(l, x, y) == oracle::pop_up(leq, covers, x, y));
      }
  }
}

TEST_CASE("interval classification on fig1") {
  FinLattice f1 = generate("fig1");
  auto c = classify_interval(f1, {f1.bottom(), f1.top()});
  CHECK(c.nuclear);
  CHECK_FALSE(c.conuclear);
  auto v = is_binuclear_lattice(f1);
  REQUIRE_FALSE(v.ok);
  CHECK(*v.witness == Interval{f1.bottom(), f1.top()});
  CHECK(v.witness_nuclear);
}

TEST_CASE("singletons and covers are always binuclear") {
  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    for (int x = 0; x < l.size(); ++x) CHECK(classify_interval(l, {x, x}).binuclear());
    for (auto [a, b] : l.covers()) CHECK(classify_interval(l, {a, b}).binuclear());
  }
}

TEST_CASE("binuclear interval counts") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(int(binuclear_intervals(generate("chain", n)).size()) == 2 * n - 1);
  }
  CHECK(binuclear_intervals(generate("boolean", 2)).size() == 9);
  // ordered set partitions of a 3-set
  CHECK(long(binuclear_intervals(generate("weak_order", 3)).size()) == oracle::fubini(3));
  CHECK(is_binuclear_lattice(generate("boolean", 3)).ok);
  CHECK(is_binuclear_lattice(generate("boolean", 4)).ok);
}

TEST_CASE("binuclear enumeration matches the oracle and respects duality") {
  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    oracle::NaiveBinuc nb(l.poset());
    CHECK(binuclear_intervals(l) == nb.intervals);

    FinLattice rev = l.reversed();
    auto bwd = binuclear_intervals(rev);
    std::vector<Interval> back;
    for (Interval i : bwd) back.push_back({l.at(rev.label(i.hi)), l.at(rev.label(i.lo))});
    std::sort(back.begin(), back.end());
    CHECK(back == nb.intervals);
  }
}

TEST_CASE("chain(3) interval order is the expected 5-chain") {
  FinLattice c3 = generate("chain", 3);
  BinucPoset bp = build_ni_order(c3);
  REQUIRE(bp.intervals.size() == 5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK((bp.order.leq(a, b) || bp.order.leq(b, a)));  // total order
  std::vector<std::string> labels;
  for (int k = 0; k < 5; ++k) labels.push_back(bp.order.label(k));
  CHECK(labels == std::vector<std::string>{"[0,0]", "[0,1]", "[1,1]", "[1,2]", "[2,2]"});
}

TEST_CASE("weak order interval counts are the ordered set partition numbers") {
  CHECK(long(build_ni_order(generate("weak_order", 3)).intervals.size()) == oracle::fubini(3));
  CHECK(long(build_ni_order(generate("weak_order", 4)).intervals.size()) == oracle::fubini(4));
  CHECK(oracle::fubini(3) == 13);
  CHECK(oracle::fubini(4) == 75);
}

TEST_CASE("the interval order exists even on non-binuclear lattices") {
  FinLattice f1 = generate("fig1");
  BinucPoset bp = build_ni_order(f1);  // carrier: nuclear-and-conuclear intervals
  CHECK(bp.intervals.size() == binuclear_intervals(f1).size());
  CHECK(!export_dot(bp.order).empty());
}

TEST_CASE("fig2 meet failure carries the candidate and a maximal witness") {
  FinLattice f2 = generate("fig2");
  auto m = ni_meet(f2, iv(f2, "g", "a"), iv(f2, "h", "b"));
  REQUIRE_FALSE(m.exists);
  CHECK(m.candidate == iv(f2, "i", "f"));
  CHECK(m.witness == iv(f2, "bot", "c"));
}

TEST_CASE("join failure on the order dual of fig2") {
  FinLattice rev = generate("fig2").reversed();
  auto j = ni_join(rev, iv(rev, "a", "g"), iv(rev, "b", "h"));
  REQUIRE_FALSE(j.exists);
  CHECK(j.candidate == iv(rev, "f", "i"));
  CHECK(j.witness == iv(rev, "c", "bot"));
}

TEST_CASE("ni bounds are idempotent and agree with the oracle") {
  for (const auto& l : corpus()) {
    if (!is_binuclear_lattice(l).ok) continue;  // fig1 is excluded
    CAPTURE(l.name());
    NiContext ctx(l);
    oracle::NaiveBinuc nb(l.poset());
    for (Interval i : ctx.poset.intervals) {
      auto m = ni_meet(ctx, i, i);
      CHECK(m.exists);
      CHECK(m.value == i);
    }
    for (Interval i : ctx.poset.intervals)
      for (Interval j : ctx.poset.intervals) {
        auto m = ni_meet(ctx, i, j);
        auto om = nb.ni_glb(i, j);
        CHECK(m.exists == om.has_value());
        if (m.exists) CHECK(m.value == *om);
        auto u = ni_join(ctx, i, j);
        auto ou = nb.ni_lub(i, j);
        CHECK(u.exists == ou.has_value());
        if (u.exists) CHECK(u.value == *ou);
      }
  }
}

TEST_CASE("ni bounds demand binuclear inputs and a binuclear lattice") {
  FinLattice f1 = generate("fig1");
  CHECK_THROWS_WITH_AS(ni_meet(f1, {f1.bottom(), f1.bottom()}, {f1.top(), f1.top()}),
                       doctest::Contains("NotBinuclearLattice"), Error);
  FinLattice f2 = generate("fig2");
  NiContext ctx(f2);
  CHECK_THROWS_WITH_AS(ni_meet(ctx, iv(f2, "bot", "f"), iv(f2, "bot", "f")),
                       doctest::Contains("NotBinuclearInput"), Error);
}

TEST_CASE("bez criterion") {
  FinLattice pt = FinLattice::from_covers("pt", {"x"}, {});
  auto v = check_bez(pt.poset());
  CHECK(v.ok);
  CHECK(v.lattice_implied);

  auto f2 = check_bez(build_ni_order(generate("fig2")).order);
  REQUIRE_FALSE(f2.ok);
  CHECK(f2.witness.has_value());

  // on every corpus member, bez passing implies the interval order really is
  // a lattice (checked against the direct pair scan)
  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    BinucPoset bp = build_ni_order(l);
    if (check_bez(bp.order).ok) CHECK(is_lattice(bp.order).ok);
  }
}

TEST_CASE("pop reformulations hold exhaustively on the corpus") {
  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    // closing off any set of lower (resp. upper) covers of x yields a
    // nuclear (resp. conuclear) interval
    for (int x = 0; x < l.size(); ++x) {
      const auto& lows = l.lower_covers(x);
      REQUIRE(lows.size() <= 12);
      for (std::uint32_t mask = 0; mask < (1u << lows.size()); ++mask) {
        std::vector<int> set{x};
        for (size_t b = 0; b < lows.size(); ++b)
          if (mask & (1u << b)) set.push_back(lows[b]);
        CHECK(classify_interval(l, {l.meet(set), x}).nuclear);
      }
      const auto& ups = l.upper_covers(x);
      REQUIRE(ups.size() <= 12);
      for (std::uint32_t mask = 0; mask < (1u << ups.size()); ++mask) {
        std::vector<int> set{x};
        for (size_t b = 0; b < ups.size(); ++b)
          if (mask & (1u << b)) set.push_back(ups[b]);
        CHECK(classify_interval(l, {x, l.join(set)}).conuclear);
      }
    }
    // an interval is nuclear iff some smaller basepoint pops down to its floor
    for (int lo = 0; lo < l.size(); ++lo)
      for (int hi = 0; hi < l.size(); ++hi) {
        if (!l.leq(lo, hi)) continue;
        bool nuclear = classify_interval(l, {lo, hi}).nuclear;
        bool witnessed = false;
        for (int x = 0; x < l.size() && !witnessed; ++x)
          if (l.leq(x, hi) && pop_down(l, x, hi) == lo) witnessed = true;
        CHECK(nuclear == witnessed);
        bool conuclear = classify_interval(l, {lo, hi}).conuclear;
        bool cowitnessed = false;
        for (int x = 0; x < l.size() && !cowitnessed; ++x)
          if (l.leq(lo, x) && pop_up(l, lo, x) == hi) cowitnessed = true;
        CHECK(conuclear == cowitnessed);
      }
  }
}

TEST_CASE("random sublattices agree with the oracle everywhere") {
  for (const FinLattice& l : oracle::random_sublattices(424242, 25)) {
    CAPTURE(l.name());
    const int n = l.size();
    oracle::NaiveBinuc nb(l.poset());
    CHECK(binuclear_intervals(l) == nb.intervals);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!l.leq(x, y)) continue;
        CHECK(pop_down(l, x, y) == oracle::pop_down(nb.leq, nb.covers, x, y));
        CHECK(pop_up(l, x, y) == oracle::pop_up(nb.leq, nb.covers, x, y));
      }
    if (is_binuclear_lattice(l).ok) {
      NiContext ctx(l);
      for (Interval i : ctx.poset.intervals)
        for (Interval j : ctx.poset.intervals) {
          auto m = ni_meet(ctx, i, j);
          auto om = nb.ni_glb(i, j);
          CHECK(m.exists == om.has_value());
          if (m.exists) CHECK(m.value == *om);
        }
      if (check_bez(ctx.poset.order).ok) CHECK(is_lattice(ctx.poset.order).ok);
    }
  }
}

TEST_CASE("ice intervals") {
  FinLattice c3 = generate("chain", 3);
  auto ice = ice_intervals(c3);
  std::vector<Interval> want = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};
  CHECK(ice == want);

  // the rank-2 torsion lattice: every interval except [t1, top] qualifies,
  // giving 12 of the 13 intervals (frozen from the scan below)
  FinLattice a2 = FinLattice::from_covers(
      "a2shape", {"0", "t1", "t2", "s", "1"},
      {{"0", "t1"}, {"t1", "t2"}, {"t2", "1"}, {"0", "s"}, {"s", "1"}});
  CHECK(ice_intervals(a2).size() == 12);

  for (const auto& l : corpus()) {
    CAPTURE(l.name());
    auto all = ice_intervals(l);
    for (int x = 0; x < l.size(); ++x)
      CHECK(std::find(all.begin(), all.end(), Interval{x, x}) != all.end());
    // direct definition
    std::vector<Interval> direct;
    for (int lo = 0; lo < l.size(); ++lo)
      for (int hi = 0; hi < l.size(); ++hi)
        if (l.leq(lo, hi) && l.leq(hi, pop_up(l, lo, l.top()))) direct.push_back({lo, hi});
    std::sort(direct.begin(), direct.end());
    CHECK(all == direct);
  }
}
