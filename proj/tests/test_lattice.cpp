#include <doctest.h>

#include <algorithm>

#include "binuc/lattice.hpp"
#include "oracles.hpp"

using namespace binuc;

namespace {

std::vector<int> ids(const FinLattice& l, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* s : labels) out.push_back(l.at(s));
  return out;
}

}  // namespace

TEST_CASE("fig2 builds with 12 elements and 16 covers") {
  FinLattice l = generate("fig2");
  CHECK(l.size() == 12);
  CHECK(l.covers().size() == 16);
  CHECK(l.label(l.bottom()) == "bot");
  CHECK(l.label(l.top()) == "top");
}

TEST_CASE("single element lattice has bottom equal to top") {
  FinLattice l = FinLattice::from_covers("pt", {"only"}, {});
  CHECK(l.size() == 1);
  CHECK(l.bottom() == l.top());
}

TEST_CASE("cycles are rejected") {
  CHECK_THROWS_WITH_AS(FinLattice::from_covers("cyc", {"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                       doctest::Contains("CycleDetected"), Error);
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_WITH_AS(FinLattice::from_covers("dup", {"a", "a"}, {}),
                       doctest::Contains("DuplicateLabel"), Error);
}

TEST_CASE("posets without a unique maximum are rejected") {
  CHECK_THROWS_WITH_AS(
      FinPoset::from_covers("v", {"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}),
      doctest::Contains("NotBounded"), Error);
}

TEST_CASE("meets and joins match the figures") {
  FinLattice f2 = generate("fig2");
  CHECK(f2.meet(ids(f2, {"g", "h"})) == f2.at("i"));
  CHECK(f2.join(ids(f2, {"g", "h"})) == f2.at("f"));

  FinLattice f1 = generate("fig1");
  CHECK(f1.meet(ids(f1, {"x", "y", "z"})) == f1.bottom());
  CHECK(f1.join(ids(f1, {"w", "v"})) == f1.at("y"));

  std::vector<int> none;
  CHECK(f1.meet(none) == f1.top());
  CHECK(f1.join(none) == f1.bottom());
}

TEST_CASE("is_lattice accepts the figures and rejects a double-top diamond") {
  CHECK(is_lattice(generate("fig1").poset()).ok);
  CHECK(is_lattice(generate("fig2").poset()).ok);

  // two incomparable upper bounds over an antichain
  FinPoset p = FinPoset::from_covers(
      "no-meet", {"bot", "a", "b", "t1", "t2", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "t1"}, {"a", "t2"}, {"b", "t1"}, {"b", "t2"},
       {"t1", "top"}, {"t2", "top"}});
  auto v = is_lattice(p);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.witness.has_value());
  auto [x, y] = *v.witness;
  CHECK(((p.label(x) == "a" && p.label(y) == "b") || (p.label(x) == "t1" && p.label(y) == "t2")));
  CHECK_THROWS_WITH_AS(FinLattice::from_poset(p), doctest::Contains("NotALattice"), Error);
}

TEST_CASE("generator families") {
  CHECK(generate("fig1").size() == 7);
  CHECK(generate("fig1").covers().size() == 9);
  CHECK(generate("boolean", 2).size() == 4);
  CHECK(generate("diamond_m3").size() == 5);
  CHECK(generate("chain", 1).size() == 1);

  FinLattice w3 = generate("weak_order", 3);
  CHECK(w3.size() == 6);
  CHECK(w3.covers().size() == 6);
  CHECK(is_lattice(w3.poset()).ok);
  CHECK(generate("weak_order", 4).size() == 24);

  CHECK_THROWS_WITH_AS(generate("nope"), doctest::Contains("UnknownFamily"), Error);
  CHECK_THROWS_WITH_AS(generate("chain", 0), doctest::Contains("BadParams"), Error);
  CHECK_THROWS_WITH_AS(generate("chain"), doctest::Contains("BadParams"), Error);
}

TEST_CASE("covers are the transitive reduction and bounds match the oracle") {
  for (const auto& l : {generate("fig1"), generate("fig2"), generate("boolean", 3),
                        generate("weak_order", 3), generate("diamond_m3")}) {
    CAPTURE(l.name());
    auto leq = oracle::leq_of(l.poset());
    CHECK(oracle::covers_of(leq) == l.covers());
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        CHECK(l.meet2(a, b) == *oracle::glb(leq, {a, b}));
        CHECK(l.join2(a, b) == *oracle::lub(leq, {a, b}));
      }
  }
}

TEST_CASE("element order is canonical by height then label") {
  FinLattice l = generate("fig2");
  // heights: bot / i j / g h / d e f / c / a b / top
  std::vector<std::string> want = {"bot", "i", "j", "g", "h", "d", "e", "f", "c", "a", "b", "top"};
  for (int k = 0; k < l.size(); ++k) CHECK(l.label(k) == want[k]);
}

TEST_CASE("dot export lists one edge upper -> lower per cover") {
  FinLattice chain2 = generate("chain", 2);
  std::string dot = export_dot(chain2.poset());
  CHECK(dot.find("\"1\" -> \"0\";") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 1);

  std::string f1 = export_dot(generate("fig1").poset());
  CHECK(std::count(f1.begin(), f1.end(), '>') == 9);
}

TEST_CASE("reversed lattice swaps bounds") {
  FinLattice l = generate("fig2");
  FinLattice r = l.reversed();
  CHECK(r.label(r.bottom()) == "top");
  CHECK(r.label(r.top()) == "bot");
  CHECK(r.covers().size() == l.covers().size());
}
