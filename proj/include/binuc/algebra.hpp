#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binuc/lattice.hpp"

namespace binuc {

/// Additive subcategory given by its set of indecomposable summands.
struct Subcat {
  std::uint64_t bits = 0;

  static Subcat none() { return {}; }
  static Subcat all(int n) { return {n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1}; }
  static Subcat single(int i) { return {std::uint64_t(1) << i}; }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= std::uint64_t(1) << i; }
  void remove(int i) { bits &= ~(std::uint64_t(1) << i); }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(Subcat o) const { return (bits & ~o.bits) == 0; }
  Subcat intersect(Subcat o) const { return {bits & o.bits}; }
  Subcat unite(Subcat o) const { return {bits | o.bits}; }
  std::vector<int> members() const;
  friend bool operator==(const Subcat&, const Subcat&) = default;
};

struct Indec {
  std::string id;
  std::vector<int> dim;         // dimension vector, length = rank
  bool projective = false;
  int end_dim = 1;              // endomorphism division-ring dimension; 1 = brick
  std::vector<int> g;           // g-vector of the minimal projective presentation
  Subcat quotients;             // indecomposable summands of all quotient modules (self included)
  std::optional<int> tau;       // AR translate, defined exactly on non-projectives
};

/// One non-split short exact sequence, each term as a multiset of
/// indecomposable summand indices. The table carries every non-split sequence
/// with indecomposable middle, plus every one with indecomposable end terms.
struct Ses {
  std::vector<int> sub, mid, quot;
};

struct AlgebraSpec {
  std::string name;
  int rank = 0;
  std::vector<Indec> indec;
  BitMatrix hom;  // hom.get(x, y) <=> Hom(x, y) != 0
  std::vector<Ses> ses;

  int size() const { return int(indec.size()); }
  std::optional<int> index_of(std::string_view id) const;
  int at(std::string_view id) const;
  Subcat projectives() const;
  Subcat bricks() const;
  std::string subcat_label(Subcat s) const;  // "{id,...}", "{}" when empty

  /// Checks all structural invariants; throws InvariantViolation.
  void validate() const;
};

/// Path algebra of the equioriented linear quiver n -> n-1 -> ... -> 1.
/// Indecomposables are the interval modules M[a,b]; quotients are the
/// top-side truncations M[c,b].
AlgebraSpec gen_linear_an(int n);

/// Path algebra of the alternating-orientation quiver 1 -> 2 <- 3. Same
/// torsion-class counts as the linear one, different Hasse shape; carries the
/// wide subcategory add(P(1)) whose interval block is a 3-chain.
AlgebraSpec gen_a3_alternating();

/// Built-in algebra families: "an" (needs n), "a3alt".
AlgebraSpec generate_algebra(const std::string& family, std::optional<int> n = std::nullopt);

}  // namespace binuc
