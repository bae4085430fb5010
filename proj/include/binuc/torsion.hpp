#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "binuc/algebra.hpp"
#include "binuc/binuclear.hpp"
#include "binuc/lattice.hpp"

namespace binuc {

/// Enumeration size cap; BINUC_MAX_INDEC overrides the default of 20.
int max_indec_cap();

/// Torsion-class predicates over an AlgebraSpec.
Subcat quotient_closure(const AlgebraSpec& a, Subcat s);
/// Least torsion class containing s (quotient + extension closure fixpoint).
Subcat tors_closure(const AlgebraSpec& a, Subcat s);
bool is_torsion_class(const AlgebraSpec& a, Subcat s);
/// {X : Hom(X, s) = 0}; checks the result is a torsion class.
Subcat left_perp(const AlgebraSpec& a, Subcat s);

/// The lattice of torsion classes, elements tagged with their subcategories.
struct TorsData {
  AlgebraSpec spec;
  FinLattice lattice;
  std::vector<Subcat> class_of;  // lattice element -> torsion class

  std::optional<int> find(Subcat s) const;
  int element_for(Subcat s) const;  // throws not_a_torsion_class
};

TorsData enumerate_tors(const AlgebraSpec& spec);

/// Heart of an interval: objects of the top class receiving no map from the
/// bottom class.
Subcat heart(const TorsData& t, Interval i);

/// Restriction of a binuclear interval to its heart: checks the interval is
/// order-isomorphic to the torsion classes of the heart (recomputed from the
/// restricted hom/quotient/ses data) and that the star product inverts it.
struct ResReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<Subcat> image;             // torsion classes of the heart
  std::optional<FinLattice> image_lattice;  // those classes under inclusion
};

ResReport res_interval(const TorsData& t, Interval i);

/// Partition of the binuclear intervals by heart.
struct CwBlock {
  Subcat heart_subcat;
  std::vector<Interval> intervals;  // canonical (lo,hi) order
};

struct CwReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<CwBlock> blocks;  // sorted by heart bits
  const CwBlock* block_of(Subcat w) const;
};

CwReport cw_partition(const TorsData& t);

/// Bricks <-> completely join-irreducible torsion classes via X -> T(X), with
/// kappa(T(X)) = perp(X); dually bricks <-> cm-irreducibles via X -> perp(X).
/// Throws BijectionFailure with a witness when any part fails.
struct BricksKappaReport {
  std::vector<int> bricks;                      // indec indices
  std::vector<std::pair<int, int>> brick_to_cj;  // (indec, lattice element)
  std::vector<std::pair<int, int>> brick_to_cm;
};

BricksKappaReport bricks_and_kappa(const TorsData& t);

/// Exact rational stability vector: numerators over one positive denominator.
struct StabilityVector {
  std::vector<long long> num;
  long long den = 1;

  static StabilityVector zero(int rank) { return {std::vector<long long>(rank, 0), 1}; }
  static StabilityVector integral(std::vector<long long> v) { return {std::move(v), 1}; }
  long long dot_num(const std::vector<int>& dim) const;  // sign equals sign of theta.dim
};

/// Semistable interval [T_theta, Tbar_theta]; asserts it is binuclear.
Interval tf_interval(const TorsData& t, const StabilityVector& theta);

struct TauRigidPair {
  Subcat modules;              // M: tau-rigid
  Subcat shifted_projectives;  // P: projectives with Hom(P, M) = 0, disjoint from M
};

struct PresiltEntry {
  TauRigidPair pair;
  Interval interval;
};

/// All support tau-rigid pairs with their intervals
/// [T(M), perp(tau M) ∩ {X : Hom(P, X) = 0}]; asserts the map is a bijection
/// onto the binuclear intervals (NotBijective otherwise).
std::vector<PresiltEntry> enumerate_presilting(const TorsData& t);

struct ConeData {
  int dim = 0;
  std::vector<std::vector<int>> generators;  // g-vectors of M plus negated g-vectors of P
};

/// Precomputed context for the stability-fan operations.
struct FssContext {
  BinucPoset binuc;
  std::vector<PresiltEntry> presilting;

  explicit FssContext(const TorsData& t);
  const TorsData& tors() const { return *tors_; }
  int dim_of(Interval i) const;  // rank minus the number of atoms of the interval
  const PresiltEntry& entry_for(Interval i) const;

 private:
  const TorsData* tors_;
};

/// Cone dimension and generators; checks the generator count matches the
/// atoms formula and that the generators are linearly independent
/// (DependentGenerators otherwise).
ConeData cone_data(const FssContext& ctx, Interval i);
ConeData cone_data(const TorsData& t, Interval i);

/// Cover classification: an NI cover has either equal tops with the upper
/// interval nested in the lower and dim +1, or equal bottoms dually with
/// dim -1; exactly one clause per cover, and conversely each clause instance
/// is a cover. Also verifies the two-of-three summand/completion conditions
/// on all pairs.
struct FssCoverReport {
  bool ok = true;
  std::vector<std::string> failures;
  int covers_checked = 0;
  int clause1 = 0, clause2 = 0;
};

FssCoverReport fss_cover_check(const TorsData& t);
FssCoverReport fss_cover_check(const FssContext& ctx);

/// Symmetric difference between the undirected Hasse graph of the NI order
/// and the codimension-1 cone-incidence graph (interval nesting with dim
/// difference one). Reported as data, not asserted empty.
struct HasseDiffReport {
  std::vector<std::pair<Interval, Interval>> hasse_only;
  std::vector<std::pair<Interval, Interval>> incidence_only;
};

HasseDiffReport hasse_vs_incidence(const TorsData& t);
HasseDiffReport hasse_vs_incidence(const FssContext& ctx);

}  // namespace binuc
