#include "binuc/algebra.hpp"

#include <algorithm>

namespace binuc {

std::vector<int> Subcat::members() const {
  std::vector<int> out;
  std::uint64_t b = bits;
  while (b) {
    out.push_back(__builtin_ctzll(b));
    b &= b - 1;
  }
  return out;
}

std::optional<int> AlgebraSpec::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (indec[i].id == id) return i;
  return std::nullopt;
}

int AlgebraSpec::at(std::string_view id) const {
  auto i = index_of(id);
  if (!i) fail(Errc::bad_params, "unknown indecomposable '" + std::string(id) + "'");
  return *i;
}

Subcat AlgebraSpec::projectives() const {
  Subcat s;
  for (int i = 0; i < size(); ++i)
    if (indec[i].projective) s.add(i);
  return s;
}

Subcat AlgebraSpec::bricks() const {
  Subcat s;
  for (int i = 0; i < size(); ++i)
    if (indec[i].end_dim == 1) s.add(i);
  return s;
}

std::string AlgebraSpec::subcat_label(Subcat s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += indec[i].id;
    first = false;
  }
  return out + "}";
}

void AlgebraSpec::validate() const {
  const int n = size();
  if (rank <= 0) fail(Errc::invariant_violation, "rank must be positive");
  if (n == 0) fail(Errc::invariant_violation, "no indecomposables");
  if (n > 64) fail(Errc::too_large, "more than 64 indecomposables");
  if (hom.size() != n) fail(Errc::invariant_violation, "hom table has wrong size");

  for (int i = 0; i < n; ++i) {
    const Indec& x = indec[i];
    for (int j = i + 1; j < n; ++j)
      if (indec[j].id == x.id)
        fail(Errc::invariant_violation, "duplicate indecomposable id '" + x.id + "'");
    if (int(x.dim.size()) != rank)
      fail(Errc::invariant_violation, "'" + x.id + "' has a dim vector of wrong arity");
    if (int(x.g.size()) != rank)
      fail(Errc::invariant_violation, "'" + x.id + "' has a g-vector of wrong arity");
    bool nonzero = false;
    for (int d : x.dim) {
      if (d < 0) fail(Errc::invariant_violation, "'" + x.id + "' has a negative dimension");
      nonzero |= d > 0;
    }
    if (!nonzero) fail(Errc::invariant_violation, "'" + x.id + "' has zero dimension vector");
    if (x.end_dim < 1) fail(Errc::invariant_violation, "'" + x.id + "' has end_dim < 1");
    if (!x.quotients.contains(i))
      fail(Errc::invariant_violation, "'" + x.id + "' is missing itself among its quotients");
    if (!x.quotients.subset_of(Subcat::all(n)))
      fail(Errc::invariant_violation, "'" + x.id + "' has out-of-range quotients");
    if (x.projective == x.tau.has_value())
      fail(Errc::invariant_violation,
           "tau must be defined exactly on non-projectives ('" + x.id + "')");
    if (x.tau && (*x.tau < 0 || *x.tau >= n))
      fail(Errc::invariant_violation, "'" + x.id + "' has out-of-range tau");
    if (!hom.get(i, i))
      fail(Errc::invariant_violation, "hom not reflexive at '" + x.id + "'");
  }

  for (const Ses& s : ses) {
    if (s.sub.empty() || s.mid.empty() || s.quot.empty())
      fail(Errc::invariant_violation, "short exact sequence with an empty term");
    std::vector<int> lhs(rank, 0), rhs(rank, 0);
    auto accumulate = [&](const std::vector<int>& part, std::vector<int>& into) {
      for (int x : part) {
        if (x < 0 || x >= n) fail(Errc::invariant_violation, "ses references unknown module");
        for (int k = 0; k < rank; ++k) into[k] += indec[x].dim[k];
      }
    };
    accumulate(s.sub, lhs);
    accumulate(s.quot, lhs);
    accumulate(s.mid, rhs);
    if (lhs != rhs)
      fail(Errc::invariant_violation,
           "dimension vectors not additive across a short exact sequence (sub '" +
               indec[s.sub[0]].id + "')");
  }
}

AlgebraSpec gen_linear_an(int n) {
  if (n < 1 || n > 6) fail(Errc::bad_rank, "linear A_n generator supports 1 <= n <= 6");
  AlgebraSpec a;
  a.name = "A" + std::to_string(n);
  a.rank = n;

  // interval modules M[s,e], 1 <= s <= e <= n, listed by (s, e)
  std::vector<std::pair<int, int>> iv;
  for (int s = 1; s <= n; ++s)
    for (int e = s; e <= n; ++e) iv.emplace_back(s, e);
  auto idx = [&](int s, int e) {
    return int(std::lower_bound(iv.begin(), iv.end(), std::make_pair(s, e)) - iv.begin());
  };

  const int m = int(iv.size());
  a.indec.resize(m);
  a.hom = BitMatrix(m);
  for (int k = 0; k < m; ++k) {
    auto [s, e] = iv[k];
    Indec& x = a.indec[k];
    x.id = "M[" + std::to_string(s) + "," + std::to_string(e) + "]";
    x.dim.assign(n, 0);
    for (int v = s; v <= e; ++v) x.dim[v - 1] = 1;
    x.projective = (s == 1);
    x.end_dim = 1;
    // minimal presentation P(e) -> M[s,e] with kernel P(s-1)
    x.g.assign(n, 0);
    x.g[e - 1] += 1;
    if (s >= 2) x.g[s - 2] -= 1;
    for (int c = s; c <= e; ++c) x.quotients.add(idx(c, e));
    if (s >= 2) x.tau = idx(s - 1, e - 1);
  }

  // Hom(M[s,e], M[c,d]) != 0 iff s <= c <= e <= d
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      auto [s, e] = iv[x];
      auto [c, d] = iv[y];
      if (s <= c && c <= e && e <= d) a.hom.set(x, y);
    }

  // non-split sequences 0 -> M[s,e] -> mid -> M[c,d] -> 0 exist iff
  // s <= c-1 <= e <= d-1; mid = M[s,d] when c = e+1 (concatenation),
  // M[s,d] + M[c,e] when the intervals overlap.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      auto [s, e] = iv[x];
      auto [c, d] = iv[y];
      if (!(s <= c - 1 && c - 1 <= e && e <= d - 1)) continue;
      Ses q;
      q.sub = {x};
      q.quot = {y};
      q.mid = {idx(s, d)};
      if (c <= e) q.mid.push_back(idx(c, e));
      std::sort(q.mid.begin(), q.mid.end());
      a.ses.push_back(std::move(q));
    }

  a.validate();
  return a;
}

AlgebraSpec gen_a3_alternating() {
  AlgebraSpec a;
  a.name = "A3alt";
  a.rank = 3;
  // quiver 1 -> 2 <- 3; P(2) is the simple at the sink
  struct Row {
    const char* id;
    std::vector<int> dim;
    bool proj;
    std::vector<int> g;
  };
  const std::vector<Row> rows = {
      {"P(1)", {1, 1, 0}, true, {1, 0, 0}},
      {"P(2)", {0, 1, 0}, true, {0, 1, 0}},
      {"P(3)", {0, 1, 1}, true, {0, 0, 1}},
      {"I(2)", {1, 1, 1}, false, {1, -1, 1}},
      {"S(1)", {1, 0, 0}, false, {1, -1, 0}},
      {"S(3)", {0, 0, 1}, false, {0, -1, 1}},
  };
  a.indec.resize(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    Indec& x = a.indec[k];
    x.id = rows[k].id;
    x.dim = rows[k].dim;
    x.projective = rows[k].proj;
    x.end_dim = 1;
    x.g = rows[k].g;
  }
  const int P1 = 0, P2 = 1, P3 = 2, I2 = 3, S1 = 4, S3 = 5;
  a.indec[P1].tau.reset();
  a.indec[P2].tau.reset();
  a.indec[P3].tau.reset();
  a.indec[I2].tau = P2;
  a.indec[S1].tau = P3;
  a.indec[S3].tau = P1;

  auto quot = [&](int x, std::initializer_list<int> q) {
    for (int v : q) a.indec[x].quotients.add(v);
  };
  quot(P1, {P1, S1});
  quot(P2, {P2});
  quot(P3, {P3, S3});
  quot(I2, {I2, S1, S3});  // I(2)/soc = S(1)+S(3)
  quot(S1, {S1});
  quot(S3, {S3});

  a.hom = BitMatrix(int(rows.size()));
  for (size_t k = 0; k < rows.size(); ++k) a.hom.set(int(k), int(k));
  for (auto [x, y] : {std::pair{P2, P1}, {P2, P3}, {P2, I2}, {P1, S1}, {P1, I2},
                      {P3, S3}, {P3, I2}, {I2, S1}, {I2, S3}})
    a.hom.set(x, y);

  a.ses = {
      {{P2}, {P1}, {S1}},
      {{P2}, {P3}, {S3}},
      {{P3}, {I2}, {S1}},
      {{P1}, {I2}, {S3}},
      {{P2}, {P1, P3}, {I2}},   // AR sequence ending at I(2)
      {{P2}, {I2}, {S1, S3}},
  };

  a.validate();
  return a;
}

AlgebraSpec generate_algebra(const std::string& family, std::optional<int> n) {
  if (family == "an") {
    if (!n) fail(Errc::bad_params, "family 'an' needs a rank parameter");
    return gen_linear_an(*n);
  }
  if (family == "a3alt") return gen_a3_alternating();
  fail(Errc::unknown_family, "no algebra family named '" + family + "'");
}

}  // namespace binuc
