#include "binuc/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace binuc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::not_bounded: return "NotBounded";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::bad_params: return "BadParams";
    case Errc::not_comparable: return "NotComparable";
    case Errc::not_binuclear_input: return "NotBinuclearInput";
    case Errc::not_binuclear_lattice: return "NotBinuclearLattice";
    case Errc::not_join_irreducible: return "NotJoinIrreducible";
    case Errc::not_meet_irreducible: return "NotMeetIrreducible";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::mismatch: return "Mismatch";
    case Errc::schema_error: return "SchemaError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::too_large: return "TooLarge";
    case Errc::bad_rank: return "BadRank";
    case Errc::not_a_torsion_class: return "NotATorsionClass";
    case Errc::not_binuclear: return "NotBinuclear";
    case Errc::closure_violation: return "ClosureViolation";
    case Errc::bijection_failure: return "BijectionFailure";
    case Errc::dependent_generators: return "DependentGenerators";
    case Errc::counterexample_found: return "CounterexampleFound";
    case Errc::not_bijective: return "NotBijective";
  }
  return "Error";
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

namespace {

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

// z in row-bitset?
bool bit(std::span<const std::uint64_t> row, int z) {
  return (row[z >> 6] >> (z & 63)) & 1u;
}

}  // namespace

FinPoset FinPoset::finish(std::string name, std::vector<std::string> labels, BitMatrix closure) {
  const int n = int(labels.size());
  // antisymmetry
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (closure.get(i, j) && closure.get(j, i))
        fail(Errc::cycle_detected, "elements '" + labels[i] + "' and '" + labels[j] +
                                       "' lie on a common cycle");
  // unique bottom / top
  int bot = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    bool is_bot = true, is_top = true;
    for (int j = 0; j < n; ++j) {
      is_bot &= closure.get(i, j);
      is_top &= closure.get(j, i);
    }
    if (is_bot) {
      if (bot >= 0) fail(Errc::not_bounded, "two minimal elements below everything");
      bot = i;
    }
    if (is_top) {
      if (top >= 0) fail(Errc::not_bounded, "two maximal elements above everything");
      top = i;
    }
  }
  if (bot < 0) fail(Errc::not_bounded, "no unique minimum in '" + name + "'");
  if (top < 0) fail(Errc::not_bounded, "no unique maximum in '" + name + "'");

  // heights (longest chain from bottom), processed in down-set-size order
  std::vector<int> order(n), height(n, 0), dsz(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (closure.get(j, i)) ++dsz[i];
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dsz[a] < dsz[b]; });
  for (int x : order)
    for (int z = 0; z < n; ++z)
      if (z != x && closure.get(z, x)) height[x] = std::max(height[x], height[z] + 1);

  // canonical element order: (height, label)
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return labels[a] < labels[b];
  });
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[perm[k]] = k;

  FinPoset p;
  p.name_ = std::move(name);
  p.labels_.resize(n);
  p.leq_ = BitMatrix(n);
  for (int k = 0; k < n; ++k) p.labels_[k] = labels[perm[k]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (closure.get(i, j)) p.leq_.set(pos[i], pos[j]);
  p.geq_ = p.leq_.transposed();
  p.bottom_ = pos[bot];
  p.top_ = pos[top];

  // covers = transitive reduction: i <. j iff up(i) & down(j) == {i, j}
  p.up_cov_.resize(n);
  p.low_cov_.resize(n);
  const int words = p.leq_.words_per_row();
  for (int i = 0; i < n; ++i) {
    auto ui = p.leq_.row(i);
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.leq_.get(i, j)) continue;
      auto dj = p.geq_.row(j);
      int between = 0;
      for (int w = 0; w < words; ++w) between += __builtin_popcountll(ui[w] & dj[w]);
      if (between == 2) {
        p.covers_.emplace_back(i, j);
        p.up_cov_[i].push_back(j);
        p.low_cov_[j].push_back(i);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

FinPoset FinPoset::from_covers(std::string name, const std::vector<std::string>& labels,
                               const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  const int n = int(labels.size());
  if (n == 0) fail(Errc::bad_params, "empty element list");
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i)
    if (!idx.emplace(labels[i], i).second)
      fail(Errc::duplicate_label, "label '" + labels[i] + "' appears twice");

  BitMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  for (const auto& [lo, hi] : cover_pairs) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end())
      fail(Errc::bad_params, "cover pair references unknown label '" +
                                 (a == idx.end() ? lo : hi) + "'");
    m.set(a->second, b->second);
  }
  // Warshall closure on packed rows
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m.get(i, k)) or_into(m.row(i), m.row(k));
  return finish(std::move(name), labels, std::move(m));
}

FinPoset FinPoset::from_leq(std::string name, const std::vector<std::string>& labels,
                            const BitMatrix& leq) {
  const int n = int(labels.size());
  if (n == 0 || leq.size() != n) fail(Errc::bad_params, "label/matrix size mismatch");
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i)
    if (!idx.emplace(labels[i], i).second)
      fail(Errc::duplicate_label, "label '" + labels[i] + "' appears twice");
  const int words = leq.words_per_row();
  for (int i = 0; i < n; ++i) {
    if (!leq.get(i, i)) fail(Errc::bad_params, "order not reflexive at '" + labels[i] + "'");
    auto ri = leq.row(i);
    for (int j = 0; j < n; ++j) {
      if (!leq.get(i, j)) continue;
      auto rj = leq.row(j);
      for (int w = 0; w < words; ++w)
        if (rj[w] & ~ri[w])
          fail(Errc::bad_params, "order not transitive at '" + labels[i] + "'");
    }
  }
  return finish(std::move(name), labels, leq);
}

std::optional<int> FinPoset::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int FinPoset::at(std::string_view label) const {
  auto i = index_of(label);
  if (!i) fail(Errc::bad_params, "unknown element '" + std::string(label) + "'");
  return *i;
}

std::optional<int> FinPoset::glb(std::span<const int> xs) const {
  const int n = size();
  const int words = leq_.words_per_row();
  std::vector<std::uint64_t> cand(words, ~std::uint64_t(0));
  if (n % 64) cand[words - 1] = (std::uint64_t(1) << (n % 64)) - 1;
  for (int x : xs)
    for (int w = 0; w < words; ++w) cand[w] &= down_row(x)[w];
  // greatest candidate: z with all candidates <= z
  for (int z = 0; z < n; ++z) {
    if (!bit(cand, z)) continue;
    bool greatest = true;
    auto dz = down_row(z);
    for (int w = 0; w < words && greatest; ++w) greatest = (cand[w] & ~dz[w]) == 0;
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<int> FinPoset::lub(std::span<const int> xs) const {
  const int n = size();
  const int words = leq_.words_per_row();
  std::vector<std::uint64_t> cand(words, ~std::uint64_t(0));
  if (n % 64) cand[words - 1] = (std::uint64_t(1) << (n % 64)) - 1;
  for (int x : xs)
    for (int w = 0; w < words; ++w) cand[w] &= up_row(x)[w];
  for (int z = 0; z < n; ++z) {
    if (!bit(cand, z)) continue;
    bool least = true;
    auto uz = up_row(z);
    for (int w = 0; w < words && least; ++w) least = (cand[w] & ~uz[w]) == 0;
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<int> FinPoset::glb2(int a, int b) const {
  int xs[2] = {a, b};
  return glb(xs);
}

std::optional<int> FinPoset::lub2(int a, int b) const {
  int xs[2] = {a, b};
  return lub(xs);
}

FinPoset FinPoset::reversed() const {
  return from_leq(name_ + "^op", labels_, geq_);
}

LatticeVerdict is_lattice(const FinPoset& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.glb2(a, b)) return {false, std::make_pair(a, b), true};
      if (!p.lub2(a, b)) return {false, std::make_pair(a, b), false};
    }
  return {true, std::nullopt, false};
}

FinLattice FinLattice::from_poset(FinPoset p) {
  const int n = p.size();
  FinLattice l;
  l.meet_.assign(size_t(n) * n, -1);
  l.join_.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto m = p.glb2(a, b);
      auto j = p.lub2(a, b);
      if (!m || !j)
        fail(Errc::not_a_lattice, "pair ('" + p.label(a) + "', '" + p.label(b) + "') has no " +
                                      (!m ? "meet" : "join") + " in '" + p.name() + "'");
      l.meet_[size_t(a) * n + b] = l.meet_[size_t(b) * n + a] = *m;
      l.join_[size_t(a) * n + b] = l.join_[size_t(b) * n + a] = *j;
    }
  l.p_ = std::move(p);
  return l;
}

FinLattice FinLattice::from_covers(std::string name, const std::vector<std::string>& labels,
                                   const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  return from_poset(FinPoset::from_covers(std::move(name), labels, cover_pairs));
}

FinLattice FinLattice::from_leq(std::string name, const std::vector<std::string>& labels,
                                const BitMatrix& leq) {
  return from_poset(FinPoset::from_leq(std::move(name), labels, leq));
}

int FinLattice::meet(std::span<const int> xs) const {
  auto m = p_.glb(xs);
  if (!m) fail(Errc::not_a_lattice, "meet scan failed on validated lattice");
  return *m;
}

int FinLattice::join(std::span<const int> xs) const {
  auto j = p_.lub(xs);
  if (!j) fail(Errc::not_a_lattice, "join scan failed on validated lattice");
  return *j;
}

namespace {

int require_n(const std::optional<int>& n, const std::string& family) {
  if (!n) fail(Errc::bad_params, "family '" + family + "' needs a size parameter");
  return *n;
}

FinLattice make_fig1() {
  return FinLattice::from_covers(
      "fig1", {"bot", "w", "v", "x", "y", "z", "top"},
      {{"bot", "w"}, {"bot", "v"}, {"w", "x"}, {"w", "y"}, {"v", "y"}, {"v", "z"},
       {"x", "top"}, {"y", "top"}, {"z", "top"}});
}

FinLattice make_fig2() {
  return FinLattice::from_covers(
      "fig2", {"bot", "i", "j", "g", "h", "f", "d", "e", "c", "a", "b", "top"},
      {{"bot", "i"}, {"bot", "j"}, {"i", "g"}, {"i", "h"}, {"g", "f"}, {"h", "f"},
       {"g", "d"}, {"h", "e"}, {"f", "c"}, {"j", "c"}, {"c", "a"}, {"c", "b"},
       {"d", "a"}, {"e", "b"}, {"a", "top"}, {"b", "top"}});
}

FinLattice make_chain(int n) {
  if (n < 1 || n > 4096) fail(Errc::bad_params, "chain size out of range");
  std::vector<std::string> labels(n);
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  for (int i = 0; i + 1 < n; ++i) cov.emplace_back(labels[i], labels[i + 1]);
  return FinLattice::from_covers("chain" + std::to_string(n), labels, cov);
}

FinLattice make_boolean(int n) {
  if (n < 1 || n > 12) fail(Errc::bad_params, "boolean rank out of range");
  const int size = 1 << n;
  std::vector<std::string> labels(size);
  for (int s = 0; s < size; ++s) {
    std::string l(n, '0');
    for (int b = 0; b < n; ++b)
      if (s & (1 << b)) l[b] = '1';
    labels[s] = l;
  }
  BitMatrix leq(size);
  for (int s = 0; s < size; ++s)
    for (int t = 0; t < size; ++t)
      if ((s & t) == s) leq.set(s, t);
  return FinLattice::from_leq("boolean" + std::to_string(n), labels, leq);
}

// Right weak order on permutations of {1..n}: u <= w iff the inversion set of
// u (as value pairs out of order) is contained in that of w.
FinLattice make_weak_order(int n) {
  if (n < 1 || n > 6) fail(Errc::bad_params, "weak_order rank out of range");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  auto inversions = [&](const std::vector<int>& w) {
    std::vector<std::pair<int, int>> inv;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) inv.emplace_back(w[j], w[i]);
    std::sort(inv.begin(), inv.end());
    return inv;
  };

  const int m = int(perms.size());
  std::vector<std::vector<std::pair<int, int>>> inv(m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    inv[i] = inversions(perms[i]);
    std::string l;
    for (int v : perms[i]) l += std::to_string(v);
    labels[i] = l;
  }
  BitMatrix leq(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (std::includes(inv[b].begin(), inv[b].end(), inv[a].begin(), inv[a].end()))
        leq.set(a, b);
  return FinLattice::from_leq("weak_order" + std::to_string(n), labels, leq);
}

FinLattice make_m3() {
  return FinLattice::from_covers("diamond_m3", {"bot", "a", "b", "c", "top"},
                                 {{"bot", "a"}, {"bot", "b"}, {"bot", "c"},
                                  {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

}  // namespace

FinLattice generate(const std::string& family, std::optional<int> n) {
  if (family == "fig1") return make_fig1();
  if (family == "fig2") return make_fig2();
  if (family == "chain") return make_chain(require_n(n, family));
  if (family == "boolean") return make_boolean(require_n(n, family));
  if (family == "weak_order") return make_weak_order(require_n(n, family));
  if (family == "diamond_m3" || family == "m3") return make_m3();
  fail(Errc::unknown_family, "no lattice family named '" + family + "'");
}

std::string export_dot(const FinPoset& p, const std::vector<std::string>* node_note) {
  std::ostringstream out;
  out << "digraph \"" << p.name() << "\" {\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  \"" << p.label(i) << "\"";
    if (node_note && !(*node_note)[i].empty())
      out << " [label=\"" << p.label(i) << ' ' << (*node_note)[i] << "\"]";
    out << ";\n";
  }
  for (const auto& [lo, hi] : p.covers())
    out << "  \"" << p.label(hi) << "\" -> \"" << p.label(lo) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace binuc
