#pragma once

#include <array>
#include <optional>
#include <vector>

#include "binuc/binuclear.hpp"
#include "binuc/lattice.hpp"

namespace binuc {

/// Completely join/meet-irreducible elements of a finite lattice: those with a
/// single lower (resp. upper) cover, paired with it.
struct IrreducibleData {
  std::vector<std::pair<int, int>> cj;  // (j, j_*)
  std::vector<std::pair<int, int>> cm;  // (m, m^*)

  bool is_cj(int x) const;
  bool is_cm(int x) const;
  int star_below(int j) const;  // j_*; -1 when j not cj-irreducible
  int star_above(int m) const;  // m^*; -1 when m not cm-irreducible
};

IrreducibleData irreducibles(const FinLattice& l);

struct KappaResult {
  std::optional<int> value;   // max K(j) when it exists
  std::vector<int> antichain;  // extremal elements of K(j) when there is no single bound
};

/// kappa(j) = max{y : j ∧ y = j_*} for j completely join-irreducible.
KappaResult kappa(const FinLattice& l, int j);
/// Dual: min{y : m ∨ y = m^*} for m completely meet-irreducible.
KappaResult kappa_dual(const FinLattice& l, int m);

struct SdVerdict {
  bool meet_sd = true;
  bool join_sd = true;
  std::optional<std::array<int, 3>> meet_witness;  // (x,y,z): x∧y = x∧z but x∧(y∨z) differs
  std::optional<std::array<int, 3>> join_witness;
};

/// Pairwise semidistributivity quasi-identities; for finite lattices these are
/// equivalent to the complete forms.
SdVerdict check_semidistributivity(const FinLattice& l);

struct KappaFlags {
  bool spatial = false;
  bool co_spatial = false;
  bool weak_meet_kappa = false;
  bool meet_kappa = false;
  bool weak_join_kappa = false;
  bool join_kappa = false;
  bool well_separated = false;
  std::vector<std::string> notes;  // human-readable witnesses for failed flags
};

KappaFlags check_kappa_properties(const FinLattice& l);

/// The (partial) kappa maps: forward is defined on the completely
/// join-irreducibles whose K(j) has a maximum, backward dually. On a finite
/// semidistributive lattice both are total and mutually inverse bijections.
struct KappaMap {
  std::vector<std::pair<int, int>> forward;   // (j, kappa(j))
  std::vector<std::pair<int, int>> backward;  // (m, kappa_dual(m))
  int image_of(int j) const;                  // -1 when absent
  int preimage_of(int m) const;
};

KappaMap kappa_map(const FinLattice& l);

/// The kappa map of binuc(l), built from the structural formulas
///   [j,j]   -> [kappa(j), kappa(j)^*]
///   [j_*,j] -> [kappa(j), kappa(j)]
/// and cross-checked against kappa computed directly on the interval order.
/// Requires l semidistributive and binuc(l) a lattice (PreconditionFailed),
/// and throws Mismatch if the two computations ever disagree.
struct KappaNiResult {
  BinucPoset poset;
  FinLattice order;                                  // binuc(l) promoted to a lattice
  std::vector<std::pair<Interval, Interval>> map;    // cj-irr interval -> cm-irr interval
};

KappaNiResult kappa_ni(const FinLattice& l);

/// Checks the characterization of completely join/meet-irreducibles of
/// binuc(l): I is cj-irr iff I.hi is cj-irr in l (and then I.lo is I.hi or its
/// lower star), the cover-shape corollaries, and the duals.
struct CjirrReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<Interval> cj_intervals;  // cj-irreducibles of binuc(l)
  std::vector<Interval> cm_intervals;
};

CjirrReport verify_cjirr_binuc(const FinLattice& l);

}  // namespace binuc
