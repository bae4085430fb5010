#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binuc {

enum class Errc {
  duplicate_label,
  cycle_detected,
  not_bounded,
  not_a_lattice,
  unknown_family,
  bad_params,
  not_comparable,
  not_binuclear_input,
  not_binuclear_lattice,
  not_join_irreducible,
  not_meet_irreducible,
  precondition_failed,
  mismatch,
  schema_error,
  invariant_violation,
  too_large,
  bad_rank,
  not_a_torsion_class,
  not_binuclear,
  closure_violation,
  bijection_failure,
  dependent_generators,
  counterexample_found,
  not_bijective,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Dense n x n boolean matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

  int size() const { return n_; }
  int words_per_row() const { return words_; }

  bool get(int i, int j) const {
    return (bits_[size_t(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j, bool v = true) {
    std::uint64_t& w = bits_[size_t(i) * words_ + (j >> 6)];
    std::uint64_t m = std::uint64_t(1) << (j & 63);
    v ? w |= m : w &= ~m;
  }
  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + size_t(i) * words_, size_t(words_)};
  }
  std::span<std::uint64_t> row(int i) {
    return {bits_.data() + size_t(i) * words_, size_t(words_)};
  }
  BitMatrix transposed() const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int n_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Closed interval [lo, hi] of a poset, by element index.
struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Finite bounded poset. Elements are canonically sorted by (height, label) at
/// construction so serialized output is deterministic. Immutable once built.
class FinPoset {
 public:
  /// Order = reflexive-transitive closure of the cover pairs.
  /// Throws duplicate_label, cycle_detected, not_bounded.
  static FinPoset from_covers(std::string name, const std::vector<std::string>& labels,
                              const std::vector<std::pair<std::string, std::string>>& cover_pairs);

  /// leq must already be a bounded partial order (checked).
  static FinPoset from_leq(std::string name, const std::vector<std::string>& labels,
                           const BitMatrix& leq);

  int size() const { return int(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::string& label(int x) const { return labels_[x]; }
  std::optional<int> index_of(std::string_view label) const;
  /// index_of that throws bad_params when the label is unknown.
  int at(std::string_view label) const;

  bool leq(int a, int b) const { return leq_.get(a, b); }
  bool lt(int a, int b) const { return a != b && leq_.get(a, b); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Cover pairs (lower, upper): exactly the transitive reduction of leq.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_cov_[x]; }
  const std::vector<int>& lower_covers(int x) const { return low_cov_[x]; }

  /// Bit rows: up_row(x) = {z : x <= z}, down_row(x) = {z : z <= x}.
  std::span<const std::uint64_t> up_row(int x) const { return leq_.row(x); }
  std::span<const std::uint64_t> down_row(int x) const { return geq_.row(x); }

  /// Greatest lower / least upper bound of a set, if it exists.
  /// glb({}) = top, lub({}) = bottom.
  std::optional<int> glb(std::span<const int> xs) const;
  std::optional<int> lub(std::span<const int> xs) const;
  std::optional<int> glb2(int a, int b) const;
  std::optional<int> lub2(int a, int b) const;

  /// Order-reversed poset (relabels canonically).
  FinPoset reversed() const;

  const BitMatrix& leq_matrix() const { return leq_; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  BitMatrix leq_;   // leq_[i][j] <=> i <= j
  BitMatrix geq_;   // transpose
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_cov_, low_cov_;
  int bottom_ = -1, top_ = -1;

  static FinPoset finish(std::string name, std::vector<std::string> labels, BitMatrix closure);
};

struct LatticeVerdict {
  bool ok = false;
  // witness pair lacking a meet or join, when !ok
  std::optional<std::pair<int, int>> witness;
  bool missing_meet = false;  // whether the witness pair lacks a meet (else a join)
};

/// Checks that every pair of a bounded poset has a meet and a join.
LatticeVerdict is_lattice(const FinPoset& p);

/// Finite lattice: a FinPoset with verified meets/joins (tables precomputed).
class FinLattice {
 public:
  /// Throws not_a_lattice (with a witness pair in the message).
  static FinLattice from_poset(FinPoset p);
  static FinLattice from_covers(std::string name, const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& cover_pairs);
  static FinLattice from_leq(std::string name, const std::vector<std::string>& labels,
                             const BitMatrix& leq);

  const FinPoset& poset() const { return p_; }
  int size() const { return p_.size(); }
  const std::string& name() const { return p_.name(); }
  const std::string& label(int x) const { return p_.label(x); }
  std::optional<int> index_of(std::string_view label) const { return p_.index_of(label); }
  int at(std::string_view label) const { return p_.at(label); }
  bool leq(int a, int b) const { return p_.leq(a, b); }
  bool lt(int a, int b) const { return p_.lt(a, b); }
  int bottom() const { return p_.bottom(); }
  int top() const { return p_.top(); }
  const std::vector<std::pair<int, int>>& covers() const { return p_.covers(); }
  const std::vector<int>& upper_covers(int x) const { return p_.upper_covers(x); }
  const std::vector<int>& lower_covers(int x) const { return p_.lower_covers(x); }

  /// n-ary bounds computed directly over the candidate set (not iterated
  /// binary ops), so meet({}) = top and join({}) = bottom exactly.
  int meet(std::span<const int> xs) const;
  int join(std::span<const int> xs) const;
  int meet2(int a, int b) const { return meet_[size_t(a) * size() + b]; }
  int join2(int a, int b) const { return join_[size_t(a) * size() + b]; }

  FinLattice reversed() const { return FinLattice::from_poset(p_.reversed()); }

 private:
  FinPoset p_;
  std::vector<int> meet_, join_;  // n*n tables filled during validation
};

/// Built-in test families: fig1, fig2, chain, boolean, weak_order, diamond_m3.
/// chain/boolean/weak_order take the size parameter n.
FinLattice generate(const std::string& family, std::optional<int> n = std::nullopt);

/// Graphviz DOT, one edge upper -> lower per cover (Hasse quiver convention).
/// node_note, when given, supplies an extra per-element annotation shown in
/// the node label.
std::string export_dot(const FinPoset& p,
                       const std::vector<std::string>* node_note = nullptr);

}  // namespace binuc
