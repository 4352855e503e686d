#include "ladderlab/eval.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

namespace ladderlab {

int ell(unsigned S, unsigned T) {
  int count = 0;
  while (T) {
    int j = std::countr_zero(T);
    count += std::popcount(S & ((1u << j) - 1u));
    T &= T - 1;
  }
  return count;
}

namespace {

struct SubsetTables {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<unsigned>> by_size;
  std::map<int, std::vector<Index>> index_of;
};

SubsetTables& subset_tables() {
  static SubsetTables t;
  return t;
}

void check_rank(int n) {
  if (n < 1 || n > 16) throw Error(ErrorCode::UnsupportedRank, "rank " + std::to_string(n) + " outside 1..16");
}

}  // namespace

const std::vector<unsigned>& subsets(int n, int a) {
  check_rank(n);
  if (a < 0 || a > n) throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(a) + " outside [0," + std::to_string(n) + "]");
  auto& t = subset_tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.by_size.find({n, a});
  if (it != t.by_size.end()) return it->second;
  std::vector<unsigned> v;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == a) v.push_back(m);
  return t.by_size.emplace(std::make_pair(n, a), std::move(v)).first->second;
}

Index subset_index(int n, unsigned mask) {
  check_rank(n);
  auto& t = subset_tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index_of.find(n);
  if (it == t.index_of.end()) {
    std::vector<Index> idx(1u << n);
    std::vector<Index> counter(static_cast<std::size_t>(n + 1), 0);
    for (unsigned m = 0; m < (1u << n); ++m) idx[m] = counter[static_cast<std::size_t>(std::popcount(m))]++;
    it = t.index_of.emplace(n, std::move(idx)).first;
  }
  return it->second[mask];
}

std::string subset_to_string(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(i + 1);
    }
  return s + "}";
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::uint64_t tensor_dimension(int n, const std::vector<int>& labels) {
  std::uint64_t d = 1;
  for (int a : labels) {
    std::uint64_t c = binomial(n, a);
    if (c != 0 && d > std::numeric_limits<std::uint64_t>::max() / c) return std::numeric_limits<std::uint64_t>::max();
    d *= c;
  }
  return d;
}

TensorBasis::TensorBasis(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
  check_rank(n);
  for (int a : labels_) {
    if (a < 0 || a > n) throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(a) + " outside [0," + std::to_string(n) + "]");
    dims_.push_back(static_cast<Index>(binomial(n, a)));
  }
  if (tensor_dimension(n, labels_) > std::numeric_limits<Index>::max() / 2)
    throw Error(ErrorCode::InvalidInput, "tensor product too large to index");
  for (Index d : dims_) size_ *= d;
}

Index TensorBasis::index(const std::vector<unsigned>& masks) const {
  if (masks.size() != labels_.size()) throw Error(ErrorCode::DimensionMismatch, "tuple length differs from basis width");
  Index idx = 0;
  for (std::size_t f = 0; f < masks.size(); ++f) {
    if (std::popcount(masks[f]) != labels_[f]) throw Error(ErrorCode::DimensionMismatch, "subset size differs from label");
    idx = idx * dims_[f] + subset_index(n_, masks[f]);
  }
  return idx;
}

std::vector<unsigned> TensorBasis::masks(Index idx) const {
  std::vector<unsigned> out(labels_.size());
  for (std::size_t f = labels_.size(); f-- > 0;) {
    out[f] = subsets(n_, labels_[f])[idx % dims_[f]];
    idx /= dims_[f];
  }
  return out;
}

Index TensorBasis::top_index() const {
  std::vector<unsigned> m;
  for (int a : labels_) m.push_back((1u << a) - 1u);
  return index(m);
}

std::string TensorBasis::describe(Index idx) const {
  std::string s;
  auto m = masks(idx);
  for (std::size_t f = 0; f < m.size(); ++f) {
    if (f) s += "(x)";
    s += subset_to_string(m[f]);
  }
  return s;
}

// ------------------------------------------------------------- rung tables

namespace {

struct UnitTerm {
  Index out1;
  Index out2;
  int sign;
  int exp;
};

struct RungTable {
  Index in_b = 0;   // dimension of the right input factor
  Index out_a = 0;  // dimensions of the output factors
  Index out_b = 0;
  std::vector<std::vector<UnitTerm>> terms;  // indexed by i1 * in_b + i2
};

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

RungTable build_rung_table(int n, int a, int b, Tilt tilt, int s) {
  auto [c, d] = rung_outputs(n, a, b, Rung{0, tilt, s});
  const auto& A = subsets(n, a);
  const auto& B = subsets(n, b);
  const auto& Cs = subsets(n, s);
  RungTable t;
  t.in_b = static_cast<Index>(B.size());
  t.out_a = static_cast<Index>(subsets(n, c).size());
  t.out_b = static_cast<Index>(subsets(n, d).size());
  t.terms.resize(A.size() * B.size());
  for (std::size_t i1 = 0; i1 < A.size(); ++i1)
    for (std::size_t i2 = 0; i2 < B.size(); ++i2) {
      unsigned S1 = A[i1], S2 = B[i2];
      auto& out = t.terms[i1 * B.size() + i2];
      for (unsigned C : Cs) {
        if (tilt == Tilt::NE) {
          if ((C & ~S1) || (C & S2)) continue;
          int e = ell(C, S2) - ell(C, S1 & ~C);
          out.push_back({subset_index(n, S1 & ~C), subset_index(n, S2 | C), parity_sign((a - s) * s + e), e});
        } else {
          if ((C & ~S2) || (C & S1)) continue;
          int e = ell(S1, C) - ell(S2 & ~C, C);
          out.push_back({subset_index(n, S1 | C), subset_index(n, S2 & ~C), parity_sign(s * (b - s) + e), e});
        }
      }
    }
  return t;
}

const RungTable& rung_table(int n, int a, int b, Tilt tilt, int s) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int, int>, RungTable> cache;
  auto key = std::make_tuple(n, a, b, static_cast<int>(tilt), s);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RungTable t = build_rung_table(n, a, b, tilt, s);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(t)).first->second;
}

template <class S>
S unit_times(const S& x, int sign, int exp) {
  return x.times_unit(sign, exp);
}

std::vector<Index> dims_of(int n, const std::vector<int>& labels) {
  std::vector<Index> d;
  for (int a : labels) d.push_back(static_cast<Index>(binomial(n, a)));
  return d;
}

template <class S>
SparseVec<S> apply_rung_vec(int n, const std::vector<int>& labels, const Rung& r, const SparseVec<S>& v) {
  auto p = static_cast<std::size_t>(r.pos);
  int a = labels[p], b = labels[p + 1];
  const RungTable& t = rung_table(n, a, b, r.tilt, r.s);
  auto dims = dims_of(n, labels);
  Index right = 1;
  for (std::size_t f = p + 2; f < dims.size(); ++f) right *= dims[f];
  Index in_block = dims[p] * dims[p + 1];
  Index out_block = t.out_a * t.out_b;
  SparseVec<S> out;
  out.reserve(v.size() * 2);
  for (const auto& [idx, x] : v) {
    Index rr = idx % right;
    Index mid = (idx / right) % in_block;
    Index left = idx / right / in_block;
    for (const auto& term : t.terms[mid]) {
      Index nidx = ((left * out_block) + term.out1 * t.out_b + term.out2) * right + rr;
      out.emplace_back(nidx, unit_times(x, term.sign, term.exp));
    }
  }
  return canonicalize(std::move(out));
}

template <class S>
SparseVec<S> apply_ladder_impl(const Ladder& L, SparseVec<S> v) {
  auto lv = L.levels();
  for (std::size_t i = 0; i < L.steps.size(); ++i) {
    if (const auto* r = std::get_if<Rung>(&L.steps[i])) {
      if (r->s == 0) continue;
      v = apply_rung_vec(L.n, lv[i], *r, v);
    }
    // stripping or inserting a 0/n strand changes no index: those factors are one-dimensional
    if (v.empty()) break;
  }
  return v;
}

}  // namespace

SparseVec<LaurentPoly> apply_ladder(const Ladder& L, const SparseVec<LaurentPoly>& v) { return apply_ladder_impl(L, v); }
SparseVec<RatFun> apply_ladder(const Ladder& L, const SparseVec<RatFun>& v) { return apply_ladder_impl(L, v); }

LaurentMatrix eval_ladder(const Ladder& L) {
  TensorBasis in(L.n, L.bottom), out(L.n, L.top());
  LaurentMatrix M(out.size(), in.size());
  for (Index j = 0; j < in.size(); ++j) M.set_column(j, apply_ladder(L, SparseVec<LaurentPoly>{{j, LaurentPoly(1)}}));
  return M;
}

EvalMatrix apply_ladder(const Ladder& L, const EvalMatrix& M) {
  TensorBasis in(L.n, L.bottom), out(L.n, L.top());
  if (M.rows() != in.size()) throw Error(ErrorCode::DimensionMismatch, "ladder bottom does not match matrix rows");
  EvalMatrix R(out.size(), M.cols());
  for (Index j = 0; j < M.cols(); ++j) R.set_column(j, apply_ladder(L, M.column(j)));
  return R;
}

EvalMatrix compose_ladder(const EvalMatrix& M, const Ladder& L) { return M * to_ratfun(eval_ladder(L)); }

LaurentMatrix eval_rung(int n, int left, int right, const Rung& rung) {
  Rung r = rung;
  r.pos = 0;
  Ladder L = Ladder::identity(n, {left, right});
  L.then(r);
  L.top();
  return eval_ladder(L);
}

LaurentMatrix merge_matrix(int n, int a, int b) {
  if (a < 0 || b < 0 || a + b > n) throw Error(ErrorCode::LabelOutOfRange, "merge needs a + b <= n");
  TensorBasis in(n, {a, b}), out(n, {a + b});
  LaurentMatrix M(out.size(), in.size());
  for (Index j = 0; j < in.size(); ++j) {
    auto m = in.masks(j);
    if (m[0] & m[1]) continue;
    int e = ell(m[0], m[1]);
    M.set_column(j, {{subset_index(n, m[0] | m[1]), LaurentPoly::monomial(parity_sign(e), e)}});
  }
  return M;
}

LaurentMatrix split_matrix(int n, int a, int b) {
  if (a < 0 || b < 0 || a + b > n) throw Error(ErrorCode::LabelOutOfRange, "split needs a + b <= n");
  TensorBasis in(n, {a + b}), out(n, {a, b});
  LaurentMatrix M(out.size(), in.size());
  for (Index j = 0; j < in.size(); ++j) {
    unsigned S = subsets(n, a + b)[j];
    SparseVec<LaurentPoly> col;
    for (unsigned T : subsets(n, a)) {
      if (T & ~S) continue;
      int e = -ell(S & ~T, T);
      col.emplace_back(out.index({T, S & ~T}), LaurentPoly::monomial(parity_sign(a * b + e), e));
    }
    M.set_column(j, canonicalize(std::move(col)));
  }
  return M;
}

EvalMatrix to_ratfun(const LaurentMatrix& M) {
  return M.map([](const LaurentPoly& p) { return RatFun(p); });
}

QMatrix specialize(const EvalMatrix& M, const Rational& value) {
  return M.map([&](const RatFun& x) { return x.specialize(value); });
}

QMatrix specialize(const LaurentMatrix& M, const Rational& value) {
  return M.map([&](const LaurentPoly& x) { return x.evaluate(value); });
}

std::optional<LaurentPoly> scalar_of(const LaurentMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0) return std::nullopt;
  LaurentPoly s = M.entry(0, 0);
  for (Index j = 0; j < M.cols(); ++j) {
    const auto& col = M.column(j);
    if (s.is_zero()) {
      if (!col.empty()) return std::nullopt;
      continue;
    }
    if (col.size() != 1 || col[0].first != j || !(col[0].second == s)) return std::nullopt;
  }
  return s;
}

// --------------------------------------------------------------- relations

namespace {

struct Term {
  LaurentPoly coef;
  Ladder ladder;
};

Ladder rungs_on(int n, std::vector<int> bottom, std::initializer_list<Rung> rs) {
  Ladder L = Ladder::identity(n, std::move(bottom));
  for (const auto& r : rs) L.then(r);
  return L;
}

bool is_valid(const Ladder& L) {
  try {
    L.levels();
    return true;
  } catch (const Error&) {
    return false;
  }
}

struct RelationSpec {
  std::string name;
  int arity;
  // builds (lhs, rhs terms); rhs ladders may be invalid and then vanish
  std::function<std::pair<Ladder, std::vector<Term>>(int n, const std::vector<int>& v)> build;
};

constexpr Tilt NE = Tilt::NE;
constexpr Tilt NW = Tilt::NW;

std::vector<Term> scalar_identity(const LaurentPoly& c, const Ladder& lhs) {
  return {Term{c, Ladder::identity(lhs.n, lhs.bottom)}};
}

const std::vector<RelationSpec>& relation_specs() {
  static const std::vector<RelationSpec> specs = {
      {"associativity-in", 5,
       [](int n, const std::vector<int>& v) {
         int x = v[0], y = v[1], z = v[2], s = v[3], t = v[4];
         Ladder lhs = rungs_on(n, {x, y, z}, {Rung{0, NE, s}, Rung{1, NW, t}});
         Ladder rhs = rungs_on(n, {x, y, z}, {Rung{1, NW, t}, Rung{0, NE, s}});
         return std::make_pair(lhs, std::vector<Term>{{LaurentPoly(1), rhs}});
       }},
      {"associativity-out", 5,
       [](int n, const std::vector<int>& v) {
         int x = v[0], y = v[1], z = v[2], s = v[3], t = v[4];
         Ladder lhs = rungs_on(n, {x, y, z}, {Rung{0, NW, s}, Rung{1, NE, t}});
         Ladder rhs = rungs_on(n, {x, y, z}, {Rung{1, NE, t}, Rung{0, NW, s}});
         return std::make_pair(lhs, std::vector<Term>{{LaurentPoly(1), rhs}});
       }},
      {"squash", 4,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1], s = v[2], r = v[3];
         Ladder lhs = rungs_on(n, {k, l}, {Rung{0, NE, s}, Rung{0, NE, r}});
         Ladder rhs = rungs_on(n, {k, l}, {Rung{0, NE, r + s}});
         return std::make_pair(lhs, std::vector<Term>{{qbinom(r + s, r), rhs}});
       }},
      {"squash-mirror", 4,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1], s = v[2], r = v[3];
         Ladder lhs = rungs_on(n, {k, l}, {Rung{0, NW, s}, Rung{0, NW, r}});
         Ladder rhs = rungs_on(n, {k, l}, {Rung{0, NW, r + s}});
         return std::make_pair(lhs, std::vector<Term>{{qbinom(r + s, r), rhs}});
       }},
      {"swap", 4,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1], s = v[2], r = v[3];
         Ladder lhs = rungs_on(n, {k, l}, {Rung{0, NE, s}, Rung{0, NW, r}});
         std::vector<Term> rhs;
         for (int t = 0; t <= std::min(r, s); ++t)
           rhs.push_back({qbinom(k - l + r - s, t), rungs_on(n, {k, l}, {Rung{0, NW, r - t}, Rung{0, NE, s - t}})});
         return std::make_pair(lhs, rhs);
       }},
      {"swap-mirror", 4,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1], s = v[2], r = v[3];
         Ladder lhs = rungs_on(n, {k, l}, {Rung{0, NW, s}, Rung{0, NE, r}});
         std::vector<Term> rhs;
         for (int t = 0; t <= std::min(r, s); ++t)
           rhs.push_back({qbinom(l - k + r - s, t), rungs_on(n, {k, l}, {Rung{0, NE, r - t}, Rung{0, NW, s - t}})});
         return std::make_pair(lhs, rhs);
       }},
      {"r3", 6,
       [](int n, const std::vector<int>& v) {
         int a = v[0], b = v[1], c = v[2], r = v[3], s = v[4], t = v[5];
         int m = r + t;
         Ladder lhs = rungs_on(n, {a, b, c}, {Rung{1, NE, r}, Rung{0, NE, s}, Rung{1, NE, t}});
         std::vector<Term> rhs;
         for (int j = 0; j <= std::min(s, t); ++j)
           rhs.push_back({qbinom(m - s, t - j), rungs_on(n, {a, b, c}, {Rung{0, NE, j}, Rung{1, NE, m}, Rung{0, NE, s - j}})});
         return std::make_pair(lhs, rhs);
       }},
      {"r3-mirror", 6,
       [](int n, const std::vector<int>& v) {
         int a = v[0], b = v[1], c = v[2], r = v[3], s = v[4], t = v[5];
         int m = r + t;
         Ladder lhs = rungs_on(n, {a, b, c}, {Rung{0, NW, r}, Rung{1, NW, s}, Rung{0, NW, t}});
         std::vector<Term> rhs;
         for (int j = 0; j <= std::min(s, t); ++j)
           rhs.push_back({qbinom(m - s, t - j), rungs_on(n, {a, b, c}, {Rung{1, NW, j}, Rung{0, NW, m}, Rung{1, NW, s - j}})});
         return std::make_pair(lhs, rhs);
       }},
      {"bigon", 2,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1];
         Ladder lhs = rungs_on(n, {k + l, 0}, {Rung{0, NE, l}, Rung{0, NW, l}});
         return std::make_pair(lhs, scalar_identity(qbinom(k + l, l), lhs));
       }},
      {"bigon-mirror", 2,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1];
         Ladder lhs = rungs_on(n, {0, k + l}, {Rung{0, NW, l}, Rung{0, NE, l}});
         return std::make_pair(lhs, scalar_identity(qbinom(k + l, l), lhs));
       }},
      {"bigon-dual", 2,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1];
         Ladder lhs = rungs_on(n, {k, n}, {Rung{0, NW, l}, Rung{0, NE, l}});
         return std::make_pair(lhs, scalar_identity(qbinom(n - k, l), lhs));
       }},
      {"bigon-dual-mirror", 2,
       [](int n, const std::vector<int>& v) {
         int k = v[0], l = v[1];
         Ladder lhs = rungs_on(n, {n, k}, {Rung{0, NE, l}, Rung{0, NW, l}});
         return std::make_pair(lhs, scalar_identity(qbinom(n - k, l), lhs));
       }},
      {"circle", 1,
       [](int n, const std::vector<int>& v) {
         int k = v[0];
         Ladder lhs = rungs_on(n, {0, n}, {Rung{0, NW, k}, Rung{0, NE, k}});
         return std::make_pair(lhs, scalar_identity(qbinom(n, k), lhs));
       }},
      {"circle-mirror", 1,
       [](int n, const std::vector<int>& v) {
         int k = v[0];
         Ladder lhs = rungs_on(n, {n, 0}, {Rung{0, NE, k}, Rung{0, NW, k}});
         return std::make_pair(lhs, scalar_identity(qbinom(n, k), lhs));
       }},
  };
  return specs;
}

const RelationSpec& find_spec(const std::string& name) {
  for (const auto& s : relation_specs())
    if (s.name == name) return s;
  throw Error(ErrorCode::InvalidPattern, "unknown relation '" + name + "'");
}

}  // namespace

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : relation_specs()) v.push_back(s.name);
    return v;
  }();
  return names;
}

int relation_arity(const std::string& relation) { return find_spec(relation).arity; }

RelationCase check_relation(const std::string& relation, const std::vector<int>& labels, int n) {
  const RelationSpec& spec = find_spec(relation);
  if (static_cast<int>(labels.size()) != spec.arity)
    throw Error(ErrorCode::InvalidPattern, relation + " takes " + std::to_string(spec.arity) + " labels");
  for (int v : labels)
    if (v < 0 || v > n) throw Error(ErrorCode::InvalidPattern, "labels must lie in [0,n]");
  auto [lhs, rhs] = spec.build(n, labels);
  if (!is_valid(lhs)) throw Error(ErrorCode::InvalidPattern, relation + " (" + int_list_to_string(labels) + ") is not admissible");
  RelationCase out;
  out.relation = relation;
  out.labels = labels;
  LaurentMatrix left = eval_ladder(lhs);
  LaurentMatrix right(left.rows(), left.cols());
  for (const auto& term : rhs) {
    if (term.coef.is_zero() || !is_valid(term.ladder)) continue;
    right = right + eval_ladder(term.ladder).scaled(term.coef);
  }
  out.passed = left == right;
  if (auto s = scalar_of(left)) out.detail = "scalar " + s->to_string();
  if (!out.passed) {
    std::size_t bad = 0;
    for (Index j = 0; j < left.cols(); ++j)
      if (left.column(j) != right.column(j)) ++bad;
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(bad) + " of " + std::to_string(left.cols()) + " columns differ";
  }
  return out;
}

std::vector<RelationCase> relation_sweep(const std::string& relation, int n) {
  const RelationSpec& spec = find_spec(relation);
  std::vector<RelationCase> out;
  std::vector<int> v(static_cast<std::size_t>(spec.arity), 0);
  while (true) {
    auto [lhs, rhs] = spec.build(n, v);
    if (is_valid(lhs)) out.push_back(check_relation(relation, v, n));
    std::size_t i = 0;
    while (i < v.size() && v[i] == n) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

// ------------------------------------------------------------ triangularity

namespace {

bool is_unit(const LaurentPoly& p) {
  return p.is_monomial() && (p.leading_coefficient() == 1 || p.leading_coefficient() == -1);
}

SparseVec<LaurentPoly> basis_vector(const TensorBasis& B, const Path& f) {
  std::vector<unsigned> m;
  for (const auto& s : f.steps) m.push_back(s.mask());
  return {{B.index(m), LaurentPoly(1)}};
}

}  // namespace

TriangularityReport triangularity_report(int n, const std::vector<int>& word) {
  TriangularityReport rep;
  auto paths = enumerate_paths(n, word);
  TensorBasis src(n, word);
  std::vector<SparseVec<LaurentPoly>> inputs;
  for (const auto& f : paths) inputs.push_back(basis_vector(src, f));
  for (const auto& e : paths) {
    Ladder L = light_ladder(e);
    // no inward rungs
    auto lv = L.levels();
    for (std::size_t i = 0; i < L.steps.size(); ++i)
      if (const auto* r = std::get_if<Rung>(&L.steps[i])) {
        auto p = static_cast<std::size_t>(r->pos);
        ++rep.checks;
        if (classify_rung(n, lv[i][p], lv[i][p + 1], *r) == RungClass::Inward)
          rep.failures.push_back("light ladder for " + e.to_string() + " contains an inward rung");
      }
    TensorBasis tgt(n, L.top());
    Index top = tgt.top_index();
    for (std::size_t fi = 0; fi < paths.size(); ++fi) {
      const Path& f = paths[fi];
      auto out = apply_ladder(L, inputs[fi]);
      ++rep.checks;
      std::string tag = "word " + int_list_to_string(word) + ", e=" + e.to_string() + ", f=" + f.to_string();
      if (f == e) {
        if (out.size() != 1 || out[0].first != top || !is_unit(out[0].second))
          rep.failures.push_back(tag + ": LL_e(x_e) is not a unit multiple of x_top");
      } else if (path_dominates(f, e)) {
        if (!out.empty()) rep.failures.push_back(tag + ": LL_e(x_f) should vanish for f > e");
      } else if (!path_dominates(e, f)) {
        // f < e may reach x_top (already for n=2, word 1,1,1); only f not below e must miss it
        if (!sparse_get(out, top).is_zero()) rep.failures.push_back(tag + ": x_top coefficient should vanish");
      } else if (!sparse_get(out, top).is_zero()) {
        ++rep.below_reaching_top;
      }
    }
  }
  // neutral ladders: only x_top reaches x_top, with a unit coefficient
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> reversed = sorted;
  std::reverse(reversed.begin(), reversed.end());
  for (const auto& target : {sorted, reversed}) {
    Ladder N = neutral_sort(n, word, target);
    LaurentMatrix M = eval_ladder(N);
    TensorBasis a(n, word), b(n, target);
    Index ta = a.top_index(), tb = b.top_index();
    for (Index j = 0; j < M.cols(); ++j) {
      LaurentPoly c = M.entry(tb, j);
      ++rep.checks;
      if (j == ta ? !is_unit(c) : !c.is_zero())
        rep.failures.push_back("neutral ladder (" + int_list_to_string(word) + ")->(" + int_list_to_string(target) +
                               ") sends " + a.describe(j) + " to x_top with coefficient " + c.to_string());
    }
  }
  return rep;
}

// --------------------------------------------------------------------- rank

long rational_rank(std::vector<SparseVec<Rational>> rows) {
  std::map<Index, SparseVec<Rational>> pivots;
  long rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      const auto& p = it->second;
      Rational factor = row.front().second;  // pivot rows are monic
      SparseVec<Rational> next;
      next.reserve(row.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          next.push_back(std::move(row[i++]));
        } else if (i == row.size() || p[j].first < row[i].first) {
          next.emplace_back(p[j].first, -factor * p[j].second);
          ++j;
        } else {
          Rational v = row[i].second - factor * p[j].second;
          if (v != 0) next.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

HomRankResult hom_rank(int n, const std::vector<int>& source, const std::vector<int>& target, unsigned seed, int points) {
  HomRankResult res;
  auto src_paths = enumerate_paths(n, source);
  auto tgt_paths = enumerate_paths(n, target);
  for (const auto& e : src_paths)
    for (const auto& f : tgt_paths)
      if (e.endpoint() == f.endpoint()) ++res.expected;
  if (res.expected == 0) {
    res.conclusive = true;
    return res;
  }
  TensorBasis src(n, source), tgt(n, target);
  std::vector<SparseVec<LaurentPoly>> inputs;
  for (const auto& g : src_paths) inputs.push_back(basis_vector(src, g));
  // images of the dominant subbasis under each source light ladder
  std::vector<std::vector<SparseVec<LaurentPoly>>> images;
  for (const auto& e : src_paths) {
    Ladder L = light_ladder(e);
    std::vector<SparseVec<LaurentPoly>> im;
    for (const auto& x : inputs) im.push_back(apply_ladder(L, x));
    images.push_back(std::move(im));
  }
  std::vector<LaurentMatrix> downs;
  for (const auto& f : tgt_paths) downs.push_back(eval_ladder(flip(light_ladder(f))));
  std::vector<SparseVec<LaurentPoly>> rows;
  for (std::size_t ei = 0; ei < src_paths.size(); ++ei)
    for (std::size_t fi = 0; fi < tgt_paths.size(); ++fi) {
      if (src_paths[ei].endpoint() != tgt_paths[fi].endpoint()) continue;
      SparseVec<LaurentPoly> row;
      for (std::size_t g = 0; g < inputs.size(); ++g) {
        auto v = downs[fi].apply(images[ei][g]);
        for (auto& [i, x] : v) row.emplace_back(static_cast<Index>(g) * tgt.size() + i, std::move(x));
      }
      rows.push_back(std::move(row));
    }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(2, 97), den(1, 13);
  std::set<Rational> used;
  for (int pt = 0; pt < points; ++pt) {
    Rational q;
    do {
      q = Rational(num(rng), den(rng));
      q.canonicalize();
    } while (q == 1 || used.count(q));
    used.insert(q);
    std::vector<SparseVec<Rational>> qrows;
    for (const auto& row : rows) {
      SparseVec<Rational> r;
      for (const auto& [i, x] : row) {
        Rational v = x.evaluate(q);
        if (v != 0) r.emplace_back(i, std::move(v));
      }
      qrows.push_back(std::move(r));
    }
    long rk = rational_rank(std::move(qrows));
    res.ranks_per_point.push_back(rk);
    res.rank = std::max(res.rank, rk);
  }
  res.conclusive = res.rank == res.expected;
  return res;
}

}  // namespace ladderlab
