#pragma once
// Independent reference computations used by the tests. Nothing here calls
// the quantities it is meant to check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/clasp.hpp"

namespace ladderlab::oracle {

// [k] = (q^k - q^-k) / (q - q^-1)
inline RatFun qi(long k) {
  LaurentPoly q1 = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
  LaurentPoly qk = LaurentPoly::monomial(1, static_cast<int>(k)) - LaurentPoly::monomial(1, static_cast<int>(-k));
  return RatFun::make(qk, q1);
}

inline RatFun qratio(long a, long b) { return qi(a) / qi(b); }

inline RatFun qfactorial(long m) {
  RatFun r(1);
  for (long i = 1; i <= m; ++i) r *= qi(i);
  return r;
}

inline RatFun qbinom_product(long m, long k) {
  if (k < 0 || k > m) return RatFun(0);
  return qfactorial(m) / (qfactorial(k) * qfactorial(m - k));
}

// Local intersection forms for n <= 4, entry by entry.
inline std::optional<RatFun> paper_kappa(const SlWeight& l, const GlWeight& mu) {
  auto Q = [](long a, long b) { return qratio(a, b); };
  const std::string m = mu.to_string();
  if (l.n() == 2) {
    long b = l[1];
    if (m == "10") return RatFun(1);
    if (m == "01") return Q(b + 1, b);
  } else if (l.n() == 3) {
    long b = l[1], c = l[2];
    if (m == "100") return RatFun(1);
    if (m == "010") return Q(b + 1, b);
    if (m == "001") return Q(c + 1, c) * Q(b + c + 2, b + c + 1);
    if (m == "110") return RatFun(1);
    if (m == "101") return Q(c + 1, c);
    if (m == "011") return Q(b + 1, b) * Q(b + c + 2, b + c + 1);
  } else if (l.n() == 4) {
    long b = l[1], c = l[2], d = l[3];
    if (m == "1000") return RatFun(1);
    if (m == "0100") return Q(b + 1, b);
    if (m == "0010") return Q(c + 1, c) * Q(b + c + 2, b + c + 1);
    if (m == "0001") return Q(d + 1, d) * Q(c + d + 2, c + d + 1) * Q(b + c + d + 3, b + c + d + 2);
    if (m == "1100") return RatFun(1);
    if (m == "1010") return Q(c + 1, c);
    if (m == "1001") return Q(d + 1, d) * Q(c + d + 2, c + d + 1);
    if (m == "0110") return Q(b + 1, b) * Q(c + b + 2, c + b + 1);
    if (m == "0101") return Q(b + 1, b) * Q(d + 1, d) * Q(b + c + d + 3, b + c + d + 2);
    if (m == "0011") return Q(c + 1, c) * Q(c + d + 2, c + d + 1) * Q(c + b + 2, c + b + 1) * Q(b + c + d + 3, b + c + d + 2);
    if (m == "1110") return RatFun(1);
    if (m == "1101") return Q(d + 1, d);
    if (m == "1011") return Q(c + 1, c) * Q(c + d + 2, c + d + 1);
    if (m == "0111") return Q(b + 1, b) * Q(b + c + 2, b + c + 1) * Q(b + c + d + 3, b + c + d + 2);
  }
  return std::nullopt;
}

// Coefficients of the sl3 triple clasp expansions of (m,k) x w_1 and (m,k) x w_2.
inline RatFun sl3_expansion_coefficient(const SlWeight& l, const GlWeight& mu) {
  long m = l[1], k = l[2];
  const std::string s = mu.to_string();
  if (s == "100" || s == "110") return RatFun(1);
  if (s == "010") return qi(m) / qi(m + 1);
  if (s == "001") return qi(k) * qi(m + k + 1) / (qi(k + 1) * qi(m + k + 2));
  if (s == "101") return qi(k) / qi(k + 1);
  if (s == "011") return qi(m) * qi(m + k + 1) / (qi(m + 1) * qi(m + k + 2));
  throw Error(ErrorCode::InvalidInput, "not an sl3 fundamental weight: " + s);
}

// dim V_lambda = prod over i < j of (sum_{t=i}^{j-1} (lambda_t + 1)) / (j - i)
inline Integer weyl_dimension_product(const SlWeight& l) {
  Integer num = 1, den = 1;
  int n = l.n();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long s = 0;
      for (int t = i; t < j; ++t) s += l[t] + 1;
      num *= s;
      den *= j - i;
    }
  return num / den;
}

// Dominant paths by brute force: every choice of subset at every letter.
inline std::map<std::vector<int>, long> endpoint_counts(int n, const std::vector<int>& word) {
  std::map<std::vector<int>, long> current = {{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
  for (int a : word) {
    std::map<std::vector<int>, long> next;
    for (const auto& [gl, count] : current)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != a) continue;
        std::vector<int> g = gl;
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] += (mask >> i) & 1u;
        bool dominant = true;
        for (int i = 0; i + 1 < n; ++i) dominant = dominant && g[static_cast<std::size_t>(i)] >= g[static_cast<std::size_t>(i + 1)];
        if (dominant) next[g] += count;
      }
    current = std::move(next);
  }
  // gl weights that differ by a multiple of (1,...,1) are the same sl weight
  std::map<std::vector<int>, long> out;
  for (const auto& [g, c] : current) {
    std::vector<int> sl;
    for (int i = 0; i + 1 < n; ++i) sl.push_back(g[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i + 1)]);
    out[sl] += c;
  }
  return out;
}

inline long brute_force_path_pairs(int n, const std::vector<int>& w, const std::vector<int>& y) {
  auto a = endpoint_counts(n, w), b = endpoint_counts(n, y);
  long total = 0;
  for (const auto& [e, c] : a)
    if (auto it = b.find(e); it != b.end()) total += c * it->second;
  return total;
}

// Next Jones-Wenzl projector: JW x 1 - [m]/[m+1] (JW x 1) U_m (JW x 1),
// U_m the cap-cup on the last two of m+1 strands.
inline EvalMatrix wenzl_step(const EvalMatrix& jw, int m) {
  std::vector<int> ones(static_cast<std::size_t>(m + 1), 1);
  Ladder U = Ladder::identity(2, ones).then(Rung{m - 1, Tilt::NE, 1}).then(Rung{m - 1, Tilt::NW, 1});
  EvalMatrix B = jw.kron_identity(2);
  EvalMatrix BUB = B * apply_ladder(U, B);
  return B - BUB.scaled(qi(m) / qi(m + 1));
}

// P_lambda x id = sum over mu of coef(mu) * (P x id) flip(T_mu) P_{lambda+mu} T_mu (P x id).
template <class Coefficient>
bool uniform_decomposition_holds(const SlWeight& l, int a, Coefficient coef) {
  int n = l.n();
  auto P = default_engine().clasp(l);
  EvalMatrix B = P->matrix.kron_identity(static_cast<Index>(qbinom(n, a).evaluate(1).get_num().get_ui()));
  EvalMatrix sum(B.rows(), B.cols());
  for (const GlWeight& mu : omega(n, a)) {
    if (!is_dominant_sum(l, mu)) continue;
    Ladder T = tier_ladder(l, a, mu);
    const EvalMatrix& Pt = default_engine().clasp(l + mu)->matrix;
    EvalMatrix term = B * apply_ladder(flip(T), compose_ladder(Pt, T) * B);
    sum = sum + term.scaled(coef(l, mu));
  }
  return sum == B;
}

}  // namespace ladderlab::oracle
