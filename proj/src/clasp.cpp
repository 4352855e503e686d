#include "ladderlab/clasp.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "ladderlab/io.hpp"

namespace ladderlab {

const char* kappa_method_name(KappaMethod m) {
  switch (m) {
    case KappaMethod::Matrix: return "matrix";
    case KappaMethod::Conjecture: return "conjecture";
    case KappaMethod::Recursive: return "recursive";
  }
  return "?";
}

namespace {

constexpr int kCacheVersion = 1;

void require_dominant(const SlWeight& lambda) {
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
}

void require_sum_dominant(const SlWeight& lambda, const GlWeight& mu) {
  require_dominant(lambda);
  if (!is_dominant_sum(lambda, mu))
    throw Error(ErrorCode::NotDominant, lambda.to_string() + " + " + mu.to_string() + " is not dominant");
}

int require_letter(const GlWeight& mu, int n) {
  if (mu.n() != n) throw Error(ErrorCode::InvalidWeight, mu.to_string() + " does not have length " + std::to_string(n));
  int a = mu.ones();
  if (a == 0 || a == n) throw Error(ErrorCode::InvalidWeight, mu.to_string() + " is not a weight of a nontrivial fundamental");
  return a;
}

Index letter_dim(int n, int a) { return static_cast<Index>(subsets(n, a).size()); }

SparseVec<RatFun> top_vector(int n, const std::vector<int>& labels) {
  TensorBasis B(n, labels);
  return {{B.top_index(), RatFun(1)}};
}

// (P (x) id_d) v, the identity factor varying fastest
SparseVec<RatFun> apply_kron(const EvalMatrix& P, Index d, const SparseVec<RatFun>& v) {
  std::vector<SparseVec<RatFun>> parts(d);
  for (const auto& [i, x] : v) parts[i % d].emplace_back(i / d, x);
  SparseVec<RatFun> out;
  for (Index t = 0; t < d; ++t) {
    if (parts[t].empty()) continue;
    for (auto& [j, y] : P.apply(parts[t])) out.emplace_back(j * d + t, std::move(y));
  }
  return canonicalize(std::move(out));
}

RatFun top_coefficient(const SparseVec<RatFun>& v, int n, const std::vector<int>& labels, const std::string& what) {
  Index top = TensorBasis(n, labels).top_index();
  for (const auto& [i, x] : v)
    if (i != top) throw Error(ErrorCode::ValidationError, what + " does not send x_top to a multiple of x_top");
  return sparse_get(v, top);
}

// c with A = c B, or nullopt
std::optional<RatFun> proportionality(const EvalMatrix& A, const EvalMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return std::nullopt;
  std::optional<RatFun> c;
  for (Index j = 0; j < A.cols(); ++j) {
    const auto& a = A.column(j);
    const auto& b = B.column(j);
    if (!c && !b.empty()) c = sparse_get(a, b.front().first) / b.front().second;
    if (!c) {
      if (!a.empty()) return std::nullopt;
      continue;
    }
    if (c->is_zero()) {
      if (!a.empty()) return std::nullopt;
      continue;
    }
    if (a.size() != b.size()) return std::nullopt;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].first != b[k].first || !(a[k].second == b[k].second * *c)) return std::nullopt;
  }
  return c ? *c : RatFun(0);
}

std::string lambda_tag(const SlWeight& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) s += (i ? "_" : "") + std::to_string(lambda.coords[i]);
  return s.empty() ? "empty" : s;
}

std::string kappa_key(const char* method, const SlWeight& lambda, const GlWeight& mu) {
  return std::string(method) + "-n" + std::to_string(lambda.n()) + "-" + lambda_tag(lambda) + "-" + mu.to_string();
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::optional<GlWeight> gamma_sigma(const GlWeight& mu, int b, const GlWeight& nu) {
  GlWeight s;
  s.bits.resize(mu.bits.size());
  for (std::size_t i = 0; i < mu.bits.size(); ++i) {
    int v = mu.bits[i] + (static_cast<int>(i) < b ? 1 : 0) - nu.bits[i];
    if (v != 0 && v != 1) return std::nullopt;
    s.bits[i] = v;
  }
  return s;
}

GlWeight mu_minus(const GlWeight& mu) {
  ElementaryData d = elementary_data(mu);
  GlWeight m = mu;
  if (d.k == 0) return m;
  for (int p = d.x.back(); p < d.y.back(); ++p) m.bits[static_cast<std::size_t>(p)] = 0;
  return m;
}

// ----------------------------------------------------------------- engine

ClaspEngine::ClaspEngine(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

std::size_t ClaspEngine::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return clasps_.size() + kappas_.size();
}

std::shared_ptr<const ClaspRecord> ClaspEngine::clasp(const SlWeight& lambda) {
  require_dominant(lambda);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = clasps_.find(lambda);
    if (it != clasps_.end()) return it->second;
  }
  std::shared_ptr<const ClaspRecord> rec;
  std::filesystem::path file;
  if (cache_dir_) {
    file = *cache_dir_ / ("clasp-n" + std::to_string(lambda.n()) + "-" + lambda_tag(lambda) + ".json");
    if (auto text = read_file(file)) {
      try {
        Json j = Json::parse(*text);
        if (j.at("version").get<int>() == kCacheVersion && j.at("n").get<int>() == lambda.n() &&
            j.at("lambda").get<std::vector<int>>() == lambda.coords) {
          auto r = std::make_shared<ClaspRecord>();
          r->lambda = lambda;
          r->sequence = j.at("sequence").get<std::vector<int>>();
          r->rank = j.at("rank").get<long>();
          r->matrix = matrix_from_json(j.at("matrix"));
          rec = r;
        }
      } catch (const std::exception&) {
        rec = nullptr;  // unreadable cache entries are rebuilt
      }
    }
  }
  bool fresh = !rec;
  if (fresh) rec = build_clasp(lambda);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = clasps_.emplace(lambda, rec);
    if (!inserted) return it->second;
  }
  if (fresh && cache_dir_) {
    Json j{{"format", "ladderlab-clasp"},
           {"version", kCacheVersion},
           {"n", lambda.n()},
           {"lambda", lambda.coords},
           {"sequence", rec->sequence},
           {"rank", rec->rank},
           {"matrix", matrix_to_json(rec->matrix)}};
    write_file_atomic(file, j.dump());
  }
  return rec;
}

std::shared_ptr<const ClaspRecord> ClaspEngine::build_clasp(const SlWeight& lambda) {
  int n = lambda.n();
  auto rec = std::make_shared<ClaspRecord>();
  rec->lambda = lambda;
  rec->sequence = canonical_sequence(lambda);
  rec->rank = weyl_dim_at_one(lambda).get_si();
  if (rec->sequence.size() <= 1) {
    rec->matrix = EvalMatrix::identity(static_cast<Index>(tensor_dimension(n, rec->sequence)));
    return rec;
  }
  int a = 0;
  for (int i = 1; i < n; ++i)
    if (lambda[i] > 0) a = i;
  SlWeight prev = lambda - fundamental(n, a);
  auto below = clasp(prev);
  EvalMatrix base = below->matrix.kron_identity(letter_dim(n, a));
  EvalMatrix P = base;
  GlWeight top = top_weight(n, a);
  for (const GlWeight& mu : omega(n, a)) {
    if (mu == top || !is_dominant_sum(prev, mu)) continue;
    RatFun k = kappa_vector(prev, mu);
    if (k.is_zero())
      throw Error(ErrorCode::DegenerateKappa, "kappa of " + prev.to_string() + ", " + mu.to_string() + " vanishes");
    Ladder T = tier_ladder(prev, a, mu);
    auto mid = clasp(prev + mu);
    EvalMatrix M = apply_ladder(T, base);
    M = mid->matrix * M;
    M = apply_ladder(flip(T), M);
    M = base * M;
    P = P - M.scaled(k.inverse());
  }
  rec->matrix = std::move(P);
  return rec;
}

std::optional<RatFun> ClaspEngine::load_kappa(const std::string& key) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = kappas_.find(key);
    if (it != kappas_.end()) return it->second;
  }
  if (!cache_dir_) return std::nullopt;
  auto text = read_file(*cache_dir_ / "kappa" / (key + ".json"));
  if (!text) return std::nullopt;
  try {
    Json j = Json::parse(*text);
    if (j.at("version").get<int>() != kCacheVersion || j.at("key").get<std::string>() != key) return std::nullopt;
    RatFun v = ratfun_from_json(j.at("value"));
    std::lock_guard<std::mutex> lock(mu_);
    kappas_.emplace(key, v);
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ClaspEngine::store_kappa(const std::string& key, const RatFun& value) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!kappas_.emplace(key, value).second) return;
  }
  if (cache_dir_) {
    Json j{{"version", kCacheVersion}, {"key", key}, {"value", ratfun_to_json(value)}};
    write_file_atomic(*cache_dir_ / "kappa" / (key + ".json"), j.dump());
  }
}

RatFun ClaspEngine::kappa_vector(const SlWeight& lambda, const GlWeight& mu) {
  int n = lambda.n();
  int a = require_letter(mu, n);
  require_sum_dominant(lambda, mu);
  if (mu == top_weight(n, a)) return RatFun(1);
  std::string key = kappa_key("vector", lambda, mu);
  if (auto v = load_kappa(key)) return *v;
  auto P = clasp(lambda);
  Ladder T = tier_ladder(lambda, a, mu);
  SparseVec<RatFun> v = top_vector(n, T.top());
  v = apply_ladder(flip(T), v);
  v = apply_kron(P->matrix, letter_dim(n, a), v);
  v = apply_ladder(T, v);
  RatFun k = top_coefficient(v, n, T.top(), "the intersection form of " + lambda.to_string() + ", " + mu.to_string());
  store_kappa(key, k);
  return k;
}

RatFun ClaspEngine::kappa_matrix(const SlWeight& lambda, const GlWeight& mu) {
  int n = lambda.n();
  int a = require_letter(mu, n);
  require_sum_dominant(lambda, mu);
  RatFun k = kappa_vector(lambda, mu);
  SlWeight next = lambda + mu;
  std::vector<int> source = canonical_sequence(lambda);
  source.push_back(a);
  if (tensor_dimension(n, canonical_sequence(next)) > matrix_limit_ || tensor_dimension(n, source) > matrix_limit_) return k;
  std::string key = kappa_key("full", lambda, mu);
  if (auto v = load_kappa(key)) return *v;

  Ladder T = tier_ladder(lambda, a, mu);
  EvalMatrix B = clasp(lambda)->matrix.kron_identity(letter_dim(n, a));
  const EvalMatrix& Pt = clasp(next)->matrix;
  EvalMatrix E = Pt * apply_ladder(T, B);
  EvalMatrix Ebar = B * apply_ladder(flip(T), Pt);
  EvalMatrix EE = E * Ebar;
  RatFun trace = EE.trace() / Pt.trace();
  if (!(EE == Pt.scaled(trace)))
    throw Error(ErrorCode::ValidationError, "E Ebar is not a multiple of the clasp for " + lambda.to_string() + ", " + mu.to_string());
  if (!(trace == k))
    throw Error(ErrorCode::ValidationError, "trace and x_top intersection forms disagree for " + lambda.to_string() + ", " +
                                                mu.to_string());
  store_kappa(key, trace);
  return trace;
}

RatFun ClaspEngine::gamma(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu) {
  int n = lambda.n();
  int a = require_letter(mu, n);
  if (mu == top_weight(n, a)) throw Error(ErrorCode::InvalidInput, "gamma needs a weight below the highest one");
  ElementaryData d = elementary_data(mu);
  int xk = d.x.back();
  if (nu.n() != n || nu.ones() != xk)
    throw Error(ErrorCode::InvalidInput, nu.to_string() + " is not a weight of the " + std::to_string(xk) + "-th fundamental");
  require_sum_dominant(lambda, mu);
  SlWeight lm = lambda - fundamental(n, xk);
  require_sum_dominant(lm, nu);
  auto sigma = gamma_sigma(mu, xk, nu);
  if (!sigma) return RatFun(0);
  SlWeight mid = lm + nu;
  std::vector<int> target = canonical_sequence(lambda + mu);
  Ladder Ts = tier_ladder(mid, a, *sigma);
  std::vector<int> seq = canonical_sequence(lm);
  seq.push_back(xk);
  Ladder Tm = tier_ladder_on(seq, lambda, a, mu);
  Ladder Ln = with_identity(flip(tier_ladder(lm, xk, nu)), {}, {a});
  auto Pmid = clasp(mid);
  auto Plow = clasp(lm);
  Index dA = letter_dim(n, a), dX = letter_dim(n, xk);

  SparseVec<RatFun> v = apply_ladder(flip(Ts), top_vector(n, target));
  v = apply_kron(Pmid->matrix, dA, v);
  RatFun den = top_coefficient(apply_ladder(Ts, v), n, target, "E_sigma Ebar_sigma");
  if (den.is_zero()) throw Error(ErrorCode::DegenerateKappa, "kappa of " + mid.to_string() + ", " + sigma->to_string() + " vanishes");
  SparseVec<RatFun> w = apply_ladder(Ln, v);
  w = apply_kron(Plow->matrix, dX * dA, w);
  w = apply_ladder(Tm, w);
  RatFun g = top_coefficient(w, n, target, "the gamma composite") / den;

  std::vector<int> src = canonical_sequence(mid);
  src.push_back(a);
  if (tensor_dimension(n, target) <= matrix_limit_ && tensor_dimension(n, src) <= matrix_limit_ &&
      tensor_dimension(n, Ln.top()) <= matrix_limit_) {
    const EvalMatrix& Pt = clasp(lambda + mu)->matrix;
    EvalMatrix Bmid = Pmid->matrix.kron_identity(dA);
    EvalMatrix Es = Pt * apply_ladder(Ts, Bmid);
    EvalMatrix H = Pt * apply_ladder(Tm, Plow->matrix.kron_identity(dX * dA) * apply_ladder(Ln, Bmid));
    auto c = proportionality(H, Es);
    if (!c || !(*c == g))
      throw Error(ErrorCode::ValidationError, "gamma composite is not the expected multiple of E_sigma for " + lambda.to_string() +
                                                  ", " + mu.to_string() + ", " + nu.to_string());
  }
  return g;
}

RatFun gamma_table(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu,
                   const std::function<RatFun(const SlWeight&, const GlWeight&)>& kappa) {
  int n = lambda.n();
  ElementaryData d = elementary_data(mu);
  if (!gamma_sigma(mu, d.x.back(), nu)) return RatFun(0);
  if (n == 4 && mu == GlWeight{{0, 1, 0, 1}} && nu == GlWeight{{0, 1, 1, 1}}) {
    RatFun g = RatFun(qint(2));
    SlWeight tau = lambda - fundamental(n, 3) - fundamental(n, 1);
    GlWeight eta{{0, 1, 0, 0}};
    if (tau.is_dominant() && is_dominant_sum(tau, eta)) g -= kappa(tau, eta).inverse();
    return g;
  }
  return RatFun(1);
}

RatFun ClaspEngine::kappa_recursive(const SlWeight& lambda, const GlWeight& mu) {
  std::vector<std::string> stack;
  return recursive_impl(lambda, mu, stack);
}

RatFun ClaspEngine::recursive_impl(const SlWeight& lambda, const GlWeight& mu, std::vector<std::string>& stack) {
  int n = lambda.n();
  if (n > 4) throw Error(ErrorCode::UnsupportedRank, "the recursive formulas are known only for n <= 4");
  if (mu.n() != n) throw Error(ErrorCode::InvalidWeight, mu.to_string() + " does not have length " + std::to_string(n));
  int a = mu.ones();
  if (a == 0 || mu == top_weight(n, a)) return RatFun(1);
  require_sum_dominant(lambda, mu);
  std::string key = kappa_key("recursive", lambda, mu);
  if (auto v = load_kappa(key)) return *v;
  if (std::find(stack.begin(), stack.end(), key) != stack.end())
    throw std::logic_error("recursive kappa formula refers back to " + key);
  stack.push_back(key);
  auto K = [&](const SlWeight& l, const GlWeight& m) { return recursive_impl(l, m, stack); };

  ElementaryData d = elementary_data(mu);
  auto k = static_cast<std::size_t>(d.k);
  int xk = d.x[k - 1];
  SlWeight lm = lambda - fundamental(n, xk);
  RatFun total = RatFun(qbinom(d.y[k] - d.alpha[k - 1], d.beta[k - 1])) * K(lm, mu_minus(mu));
  GlWeight top = top_weight(n, xk);
  for (const GlWeight& nu : omega(n, xk)) {
    if (nu == top || !is_dominant_sum(lm, nu)) continue;
    auto sigma = gamma_sigma(mu, xk, nu);
    if (!sigma) continue;
    RatFun g = gamma_table(lambda, mu, nu, K);
    if (g.is_zero()) continue;
    total -= K(lm + nu, *sigma) / K(lm, nu) * g * g;
  }
  stack.pop_back();
  store_kappa(key, total);
  return total;
}

// ------------------------------------------------------------ free functions

namespace {
std::unique_ptr<ClaspEngine>& engine_slot() {
  static std::unique_ptr<ClaspEngine> e = std::make_unique<ClaspEngine>();
  return e;
}
}  // namespace

ClaspEngine& default_engine() { return *engine_slot(); }

void configure_default_engine(std::optional<std::filesystem::path> cache_dir) {
  engine_slot() = std::make_unique<ClaspEngine>(std::move(cache_dir));
}

ClaspRecord compute_clasp(const SlWeight& lambda) { return *default_engine().clasp(lambda); }
RatFun kappa_matrix(const SlWeight& lambda, const GlWeight& mu) { return default_engine().kappa_matrix(lambda, mu); }
RatFun kappa_recursive(const SlWeight& lambda, const GlWeight& mu) { return default_engine().kappa_recursive(lambda, mu); }
RatFun gamma(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu) { return default_engine().gamma(lambda, mu, nu); }

RatFun kappa_conjecture(const SlWeight& lambda, const GlWeight& mu) {
  require_letter(mu, lambda.n());
  require_sum_dominant(lambda, mu);
  RatFun k(1);
  for (const auto& alpha : inversion_set(mu)) {
    int A = pairing_A(lambda, alpha);
    k *= RatFun::make(qint(A), qint(A - 1));
  }
  if (!(k == kappa_conjecture_shifted(lambda, mu)))
    throw std::logic_error("the two forms of the product formula disagree at " + lambda.to_string() + ", " + mu.to_string());
  return k;
}

RatFun kappa_conjecture_shifted(const SlWeight& lambda, const GlWeight& mu) {
  require_letter(mu, lambda.n());
  require_sum_dominant(lambda, mu);
  SlWeight next = lambda + mu;
  RatFun k(1);
  for (const auto& alpha : inversion_set(mu)) k *= RatFun::make(qint(pairing_A(lambda, alpha)), qint(pairing_A(next, alpha)));
  return k;
}

RatFun weyl_dim(const SlWeight& lambda) {
  require_dominant(lambda);
  SlWeight zero = SlWeight::zero(lambda.n());
  RatFun d(1);
  for (const auto& alpha : positive_roots(lambda.n()))
    d *= RatFun::make(qint(pairing_A(lambda, alpha)), qint(pairing_A(zero, alpha)));
  return d;
}

Integer weyl_dim_at_one(const SlWeight& lambda) {
  require_dominant(lambda);
  SlWeight zero = SlWeight::zero(lambda.n());
  Rational d(1);
  for (const auto& alpha : positive_roots(lambda.n())) d *= Rational(pairing_A(lambda, alpha), pairing_A(zero, alpha));
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num();
}

// ----------------------------------------------------------------- checks

ClaspCheck check_clasp(const ClaspRecord& P) {
  ClaspCheck c;
  int n = P.lambda.n();
  const auto& seq = P.sequence;
  const EvalMatrix& M = P.matrix;
  std::string who = "clasp " + P.lambda.to_string();
  c.idempotent = (M * M == M);
  if (!c.idempotent) c.failures.push_back(who + ": not idempotent");

  c.annihilated = true;
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
    for (Tilt t : {Tilt::NE, Tilt::NW}) {
      for (int s = 1; s <= n; ++s) {
        Rung r{static_cast<int>(p), t, s};
        try {
          if (classify_rung(n, seq[p], seq[p + 1], r) != RungClass::Outward) continue;
        } catch (const Error&) {
          continue;
        }
        Ladder L = Ladder::identity(n, seq);
        L.then(r);
        bool below = apply_ladder(L, M).is_zero();
        bool above = compose_ladder(M, flip(L)).is_zero();
        if (!below || !above) {
          c.annihilated = false;
          c.failures.push_back(who + ": outward rung " + tilt_name(t) + " s=" + std::to_string(s) + " at " + std::to_string(p) +
                               (below ? "" : " survives on top") + (above ? "" : " survives below"));
        }
      }
    }
  }

  Index top = TensorBasis(n, seq).top_index();
  c.top_entry_one = M.entry(top, top).is_one();
  if (!c.top_entry_one) c.failures.push_back(who + ": x_top entry is " + M.entry(top, top).to_string());

  RatFun tr = M.trace();
  c.weyl = weyl_dim_at_one(P.lambda).get_si();
  c.trace_matches = tr.is_laurent() && (tr.num().is_zero() || (tr.num().low() == 0 && tr.num().high() == 0)) &&
                    tr == RatFun(c.weyl);
  c.trace = c.trace_matches ? c.weyl : -1;
  if (!c.trace_matches) c.failures.push_back(who + ": trace " + tr.to_string() + " differs from dimension " + std::to_string(c.weyl));
  return c;
}

RecursionCheck check_recursion(const SlWeight& lambda, const GlWeight& mu) {
  ClaspEngine& E = default_engine();
  int n = lambda.n();
  require_letter(mu, n);
  RecursionCheck out;
  out.lhs = E.kappa_vector(lambda, mu);
  ElementaryData d = elementary_data(mu);
  if (d.k == 0) {
    out.rhs = RatFun(1);
    out.holds = out.lhs == out.rhs;
    return out;
  }
  auto k = static_cast<std::size_t>(d.k);
  int xk = d.x[k - 1];
  SlWeight lm = lambda - fundamental(n, xk);
  GlWeight mm = mu_minus(mu);
  RatFun first = RatFun(qbinom(d.y[k] - d.alpha[k - 1], d.beta[k - 1]));
  if (mm.ones() > 0) first *= E.kappa_vector(lm, mm);
  out.rhs = first;
  out.terms.push_back("first " + first.to_string());
  GlWeight top = top_weight(n, xk);
  for (const GlWeight& nu : omega(n, xk)) {
    if (nu == top || !is_dominant_sum(lm, nu)) continue;
    auto sigma = gamma_sigma(mu, xk, nu);
    if (!sigma) continue;
    RatFun g = E.gamma(lambda, mu, nu);
    out.terms.push_back("nu " + nu.to_string() + " gamma " + g.to_string());
    if (g.is_zero()) continue;
    out.rhs -= E.kappa_vector(lm + nu, *sigma) / E.kappa_vector(lm, nu) * g * g;
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

// ------------------------------------------------------------------ oracle

EvalMatrix clasp_oracle(const SlWeight& lambda) {
  require_dominant(lambda);
  int n = lambda.n();
  std::vector<int> seq = canonical_sequence(lambda);
  auto dim = static_cast<Index>(tensor_dimension(n, seq));
  if (seq.size() <= 1) return EvalMatrix::identity(dim);

  std::vector<Path> paths = enumerate_paths(n, seq);
  std::vector<LaurentMatrix> LL, FL;
  for (const auto& p : paths) {
    Ladder L = light_ladder(p);
    LL.push_back(eval_ladder(L));
    FL.push_back(eval_ladder(flip(L)));
  }
  std::vector<LaurentMatrix> DL;
  for (std::size_t e = 0; e < paths.size(); ++e)
    for (std::size_t f = 0; f < paths.size(); ++f)
      if (paths[e].endpoint() == paths[f].endpoint()) DL.push_back(FL[f] * LL[e]);
  auto N = static_cast<Index>(DL.size());

  // rows keyed by (light ladder, output, input)
  std::map<std::tuple<std::size_t, Index, Index>, SparseVec<LaurentPoly>> rows;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (paths[p].is_full()) continue;
    for (Index u = 0; u < N; ++u)
      for (auto& [i, j, x] : (LL[p] * DL[u]).triplets()) rows[{p, i, j}].emplace_back(u, std::move(x));
  }
  Index top = TensorBasis(n, seq).top_index();
  SparseVec<LaurentPoly> norm;
  for (Index u = 0; u < N; ++u) {
    LaurentPoly x = DL[u].entry(top, top);
    if (!x.is_zero()) norm.emplace_back(u, x);
  }

  // pick N-1 independent equations at a rational value of q
  std::vector<const SparseVec<LaurentPoly>*> chosen;
  bool found = false;
  for (const Rational& q0 : {Rational(2), Rational(3, 2), Rational(5, 3)}) {
    chosen.clear();
    std::vector<std::vector<Rational>> basis;
    std::vector<Index> pivots;
    auto try_add = [&](const SparseVec<LaurentPoly>& row) {
      std::vector<Rational> r(N, Rational(0));
      for (const auto& [u, x] : row) r[u] = x.evaluate(q0);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (r[pivots[b]] == 0) continue;
        Rational f = r[pivots[b]] / basis[b][pivots[b]];
        for (Index c = 0; c < N; ++c) r[c] -= f * basis[b][c];
      }
      for (Index c = 0; c < N; ++c)
        if (r[c] != 0) {
          basis.push_back(std::move(r));
          pivots.push_back(c);
          return true;
        }
      return false;
    };
    for (const auto& [key, row] : rows) {
      if (basis.size() + 1 >= N) break;
      if (try_add(row)) chosen.push_back(&row);
    }
    if (basis.size() + 1 != N) continue;
    if (!try_add(norm)) continue;
    found = true;
    break;
  }
  if (!found)
    throw Error(ErrorCode::NonUniqueSolution, "clasp conditions for " + lambda.to_string() + " do not cut out a line");

  // exact solve over Q(q)
  std::vector<std::vector<RatFun>> A(N, std::vector<RatFun>(N + 1, RatFun(0)));
  for (Index r = 0; r + 1 < N; ++r)
    for (const auto& [u, x] : *chosen[r]) A[r][u] = RatFun(x);
  for (const auto& [u, x] : norm) A[N - 1][u] = RatFun(x);
  A[N - 1][N] = RatFun(1);
  for (Index c = 0; c < N; ++c) {
    Index p = c;
    while (p < N && A[p][c].is_zero()) ++p;
    if (p == N) throw Error(ErrorCode::NonUniqueSolution, "singular clasp system for " + lambda.to_string());
    std::swap(A[p], A[c]);
    RatFun inv = A[c][c].inverse();
    for (Index k = c; k <= N; ++k) A[c][k] *= inv;
    for (Index r = 0; r < N; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      RatFun f = A[r][c];
      for (Index k = c; k <= N; ++k)
        if (!A[c][k].is_zero()) A[r][k] -= f * A[c][k];
    }
  }
  std::vector<RatFun> coef(N);
  for (Index u = 0; u < N; ++u) coef[u] = A[u][N];

  for (const auto& [key, row] : rows) {
    RatFun s(0);
    for (const auto& [u, x] : row)
      if (!coef[u].is_zero()) s += coef[u] * RatFun(x);
    if (!s.is_zero()) throw Error(ErrorCode::ValidationError, "oracle solution violates a clasp equation");
  }

  EvalMatrix phi(dim, dim);
  for (Index u = 0; u < N; ++u)
    if (!coef[u].is_zero()) phi = phi + to_ratfun(DL[u]).scaled(coef[u]);
  return phi;
}

// ------------------------------------------------------------------ sweeps

std::vector<SlWeight> dominant_weights(int n, int level_bound) {
  std::vector<SlWeight> out;
  std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
  for (int level = 0; level <= level_bound; ++level) {
    std::vector<SlWeight> at;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == c.size()) {
        c[i] = left;
        at.emplace_back(c);
        return;
      }
      for (int v = left; v >= 0; --v) {
        c[i] = v;
        rec(i + 1, left - v);
      }
    };
    if (c.empty()) {
      if (level == 0) at.emplace_back(c);
    } else {
      rec(0, level);
    }
    out.insert(out.end(), at.begin(), at.end());
  }
  return out;
}

std::vector<std::pair<SlWeight, GlWeight>> kappa_domain(int n, int level_bound) {
  std::vector<std::pair<SlWeight, GlWeight>> out;
  for (const auto& lambda : dominant_weights(n, level_bound))
    for (int a = 1; a < n; ++a)
      for (const auto& mu : omega(n, a))
        if (is_dominant_sum(lambda, mu)) out.emplace_back(lambda, mu);
  return out;
}

std::vector<SweepRow> conjecture_sweep(int n, int level_bound, int jobs, bool with_matrix) {
  auto domain = kappa_domain(n, level_bound);
  std::vector<SweepRow> rows(domain.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < domain.size(); i = next++) {
      SweepRow& r = rows[i];
      r.n = n;
      r.lambda = domain[i].first;
      r.mu = domain[i].second;
      try {
        r.conjecture = kappa_conjecture(r.lambda, r.mu);
        if (with_matrix) r.matrix = kappa_matrix(r.lambda, r.mu);
        if (n <= 4) r.recursive = kappa_recursive(r.lambda, r.mu);
        r.agree = true;
        for (const auto* v : {&r.matrix, &r.recursive})
          if (*v && !(**v == *r.conjecture)) r.agree = false;
      } catch (const std::exception& e) {
        r.error = e.what();
        r.agree = false;
      }
    }
  };
  int workers = std::max(1, jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace ladderlab
