#pragma once

#include <array>
#include <optional>
#include <vector>

#include "binuc/lattice.hpp"

namespace binuc {

struct IntervalClass {
  bool nuclear = false;
  bool conuclear = false;
  bool binuclear() const { return nuclear && conuclear; }
};

/// pop_x(y) = y ∧ ⋀{z : x <= z <. y}. Requires x <= y.
int pop_down(const FinLattice& l, int x, int y);

/// pop^y(x) = x ∨ ⋁{z : x <. z <= y}. Requires x <= y.
int pop_up(const FinLattice& l, int x, int y);

IntervalClass classify_interval(const FinLattice& l, Interval i);

/// All binuclear intervals, ordered by (lo, hi).
std::vector<Interval> binuclear_intervals(const FinLattice& l);

struct BinuclearVerdict {
  bool ok = false;
  std::optional<Interval> witness;  // nuclear xor conuclear interval, when !ok
  bool witness_nuclear = false;     // which side the witness satisfies
};

/// Whether the nuclear and conuclear intervals of l coincide.
BinuclearVerdict is_binuclear_lattice(const FinLattice& l);

/// The binuclear interval order: carrier binuc(l), I <= J iff lo and hi are
/// componentwise below. Defined whether or not l itself is binuclear.
struct BinucPoset {
  std::vector<Interval> intervals;  // canonical (lo, hi) order; index = poset element
  FinPoset order;                   // elements labelled "[lo,hi]"

  int index_of(Interval i) const;            // -1 when absent
  int at(Interval i) const;                  // throws bad_params when absent
  Interval interval(int x) const { return intervals[x]; }
};

BinucPoset build_ni_order(const FinLattice& l);

/// Shared context for repeated NI-order bound queries.
struct NiContext {
  const FinLattice& base;
  BinucPoset poset;
  bool base_binuclear;

  explicit NiContext(const FinLattice& l);
};

struct NiBound {
  bool exists = false;
  Interval value{};      // the bound, when it exists
  Interval candidate{};  // value predicted by the pop formula
  Interval witness{};    // when !exists: a bound of the pair not comparable with the candidate
};

/// Meet in the NI order. Computes the pop-formula candidate, then verifies by
/// brute force that it is binuclear and the greatest lower bound; the formula
/// alone is only valid conditional on existence. Requires both inputs
/// binuclear and the base lattice binuclear.
NiBound ni_meet(const FinLattice& l, Interval i, Interval j);
NiBound ni_join(const FinLattice& l, Interval i, Interval j);
NiBound ni_meet(const NiContext& ctx, Interval i, Interval j);
NiBound ni_join(const NiContext& ctx, Interval i, Interval j);

struct BezVerdict {
  bool ok = false;
  bool lattice_implied = false;              // ok and bounded
  std::optional<std::array<int, 3>> witness;  // (x, y, z): x,y <. z and x ∧ y missing
};

/// BEZ test: every pair covered by a common element has a meet. For a finite
/// bounded poset this implies the lattice property.
BezVerdict check_bez(const FinPoset& p);

/// Intervals [x,y] with y <= pop^top(x); their hearts are the ICE-closed
/// subcategories in the torsion-class reading.
std::vector<Interval> ice_intervals(const FinLattice& l);

}  // namespace binuc
