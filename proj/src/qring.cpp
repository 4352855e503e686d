#include "ladderlab/qring.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>

namespace ladderlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtValue: return "PoleAtValue";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::PathMismatch: return "PathMismatch";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::DegenerateKappa: return "DegenerateKappa";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coefs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coefs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& coef, int exponent) {
  LaurentPoly p;
  if (coef != 0) {
    p.low_ = exponent;
    p.coefs_.push_back(coef);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<Integer> coefs) {
  LaurentPoly p;
  p.low_ = low;
  p.coefs_ = std::move(coefs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  if (terms.empty()) return {};
  int lo = terms.front().first, hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Integer> coefs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms) coefs[static_cast<std::size_t>(e - lo)] += c;
  return from_coefficients(lo, std::move(coefs));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coefs_.size() && coefs_[first] == 0) ++first;
  if (first == coefs_.size()) {
    coefs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coefs_.size();
  while (coefs_[last - 1] == 0) --last;
  if (first > 0 || last < coefs_.size()) {
    coefs_.erase(coefs_.begin() + static_cast<std::ptrdiff_t>(last), coefs_.end());
    coefs_.erase(coefs_.begin(), coefs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

bool LaurentPoly::is_one() const { return low_ == 0 && coefs_.size() == 1 && coefs_[0] == 1; }

bool LaurentPoly::is_monomial() const { return coefs_.size() == 1; }

Integer LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coefs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coefs_.size(); ++i)
    if (coefs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coefs_[i]);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  if (lo < low_) {
    coefs_.insert(coefs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  if (static_cast<int>(coefs_.size()) < hi - lo + 1) coefs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coefs_.size(); ++i)
    coefs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coefs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coefs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coefs_.size() + b.coefs_.size() - 1);
  for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
    if (a.coefs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coefs_[i].get_mpz_t(), b.coefs_[j].get_mpz_t());
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::times_unit(int sign, int k) const {
  LaurentPoly r = shifted(k);
  if (sign < 0)
    for (auto& c : r.coefs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || (coefs_[0] != 1 && coefs_[0] != -1))
      throw Error(ErrorCode::InvalidInput, "negative power of a non-unit Laurent polynomial");
    Integer c = coefs_[0];
    if ((-e) % 2 == 0) c = 1;
    return monomial(c, low_ * e);
  }
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coefs_.rbegin(), coefs_.rend());
  return from_coefficients(-high(), std::move(rev));
}

Rational LaurentPoly::evaluate(const Rational& value) const {
  if (is_zero()) return 0;
  if (value == 0) {
    if (low_ < 0) throw Error(ErrorCode::PoleAtValue, "negative power of q at q = 0");
    return low_ == 0 ? Rational(coefs_[0]) : Rational(0);
  }
  Rational acc = 0;
  for (std::size_t i = coefs_.size(); i-- > 0;) {
    acc *= value;
    acc += coefs_[i];
  }
  Rational scale = 1;
  Rational base = low_ >= 0 ? value : Rational(1) / value;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

std::string integer_to_string(const Integer& z) { return z.get_str(); }

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Integer& c = coefs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string LaurentPoly::to_term_list() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << ' ';
    first = false;
    os << e << ':' << c.get_str();
  }
  return os.str();
}

std::size_t hash_value(const LaurentPoly& p) {
  std::size_t h = std::hash<int>{}(p.low());
  for (const auto& c : p.coefficients())
    h ^= std::hash<std::string>{}(c.get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ------------------------------------------------------------ polynomial gcd

namespace {

using Coefs = std::vector<Integer>;

Integer content_of(const Coefs& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Coefs divided(Coefs c, const Integer& d) {
  if (d == 1) return c;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return c;
}

void strip_high_zeros(Coefs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Exact division of polynomials with constant term at index 0; nullopt if b does not divide a.
std::optional<Coefs> divide_coefs(const Coefs& a, const Coefs& b) {
  if (a.empty()) return Coefs{};
  if (b.empty() || a.size() < b.size()) return std::nullopt;
  Coefs r = a;
  std::size_t qlen = a.size() - b.size() + 1;
  Coefs quot(qlen);
  const Integer& lb = b.back();
  for (std::size_t i = qlen; i-- > 0;) {
    Integer& top = r[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(r[i + j].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
    quot[i] = std::move(qc);
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return quot;
}

Integer max_norm(const Coefs& c) {
  Integer m = 0;
  for (const auto& x : c)
    if (abs(x) > m) m = abs(x);
  return m;
}

Integer eval_at(const Coefs& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

// Primitive part with positive leading coefficient.
Coefs primitive(Coefs c) {
  strip_high_zeros(c);
  if (c.empty()) return c;
  Integer g = content_of(c);
  if (c.back() < 0) g = -g;
  return divided(std::move(c), g);
}

// Pseudo-remainder sequence with primitive parts; slow but certain.
Coefs gcd_prs(Coefs a, Coefs b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Coefs r = a;
    const Integer lb = b.back();
    while (r.size() >= b.size()) {
      Integer lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& x : r) x *= lb;
      for (std::size_t j = 0; j < b.size(); ++j)
        mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
      strip_high_zeros(r);
      if (!r.empty()) {
        Integer g = content_of(r);
        r = divided(std::move(r), g);
      }
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return a;
}

// Heuristic gcd of primitive polynomials via evaluation at a large integer.
std::optional<Coefs> gcd_heuristic(const Coefs& a, const Coefs& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer ga = eval_at(a, xi), gb = eval_at(b, xi), g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    Coefs cand;
    Integer half = xi / 2;
    while (g != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      cand.push_back(r);
      g -= r;
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    cand = primitive(std::move(cand));
    if (!cand.empty() && divide_coefs(a, cand) && divide_coefs(b, cand)) return cand;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Polynomial part of a Laurent polynomial: coefficients from its lowest term.
Coefs poly_part(const LaurentPoly& p) { return p.coefficients(); }

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Coefs ca = poly_part(a), cb = poly_part(b);
  if (ca.empty() && cb.empty()) return {};
  if (ca.empty()) return LaurentPoly::from_coefficients(0, primitive(cb)) * LaurentPoly(content_of(cb));
  if (cb.empty()) return LaurentPoly::from_coefficients(0, primitive(ca)) * LaurentPoly(content_of(ca));
  Integer cont;
  Integer ka = content_of(ca), kb = content_of(cb);
  mpz_gcd(cont.get_mpz_t(), ka.get_mpz_t(), kb.get_mpz_t());
  Coefs pa = primitive(ca), pb = primitive(cb);
  Coefs g;
  if (pa.size() == 1 || pb.size() == 1) {
    g = Coefs{Integer(1)};
  } else if (pa == pb) {
    g = pa;
  } else if (auto h = gcd_heuristic(pa, pb)) {
    g = std::move(*h);
  } else {
    g = gcd_prs(pa, pb);
  }
  for (auto& x : g) x *= cont;
  return LaurentPoly::from_coefficients(0, std::move(g));
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  auto q = divide_coefs(a.coefficients(), b.coefficients());
  if (!q) return std::nullopt;
  return LaurentPoly::from_coefficients(a.low() - b.low(), std::move(*q));
}

namespace {

LaurentPoly divide_or_die(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("inexact division during rational function arithmetic");
  return std::move(*q);
}

}  // namespace

// -------------------------------------------------------------------- RatFun

RatFun RatFun::make(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  RatFun r;
  if (num.is_zero()) return r;
  LaurentPoly n = num.shifted(-den.low());
  LaurentPoly d = den.shifted(-den.low());
  if (d.is_monomial()) {
    // d is an integer constant: cancel only the integer content
    Integer c = d.leading_coefficient();
    Integer g = content_of(n.coefficients());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (c < 0) g = -g;
    r.num_ = divide_or_die(n, LaurentPoly(g));
    r.den_ = LaurentPoly(Integer(c / g));
    return r;
  }
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = divide_or_die(n, g);
    d = divide_or_die(d, g);
  }
  if (d.leading_coefficient() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatFun ratfun_normalize(const LaurentPoly& num, const LaurentPoly& den) { return RatFun::make(num, den); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    LaurentPoly n = num_ + o.num_;
    return *this = make(n, den_);
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  if (g.is_one()) {
    LaurentPoly n = num_ * o.den_ + o.num_ * den_;
    LaurentPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  LaurentPoly b1 = divide_or_die(den_, g), d1 = divide_or_die(o.den_, g);
  LaurentPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatFun();
  LaurentPoly h = poly_gcd(t, g);
  if (!h.is_one()) {
    t = divide_or_die(t, h);
    g = divide_or_die(g, h);
  }
  num_ = std::move(t);
  den_ = b1 * g * d1;
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    LaurentPoly g = poly_gcd(a, d);
    if (!g.is_one()) {
      a = divide_or_die(a, g);
      d = divide_or_die(d, g);
    }
  }
  if (!b.is_one()) {
    LaurentPoly g = poly_gcd(c, b);
    if (!g.is_one()) {
      c = divide_or_die(c, g);
      b = divide_or_die(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return make(den_, num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::times_unit(int sign, int exponent) const {
  RatFun r = *this;
  r.num_ = r.num_.times_unit(sign, exponent);
  return r;
}

RatFun RatFun::bar() const { return make(num_.bar(), den_.bar()); }

Rational RatFun::specialize(const Rational& value) const {
  Rational d = den_.evaluate(value);
  if (d == 0) throw Error(ErrorCode::PoleAtValue, "denominator vanishes at q = " + value.get_str());
  Rational r = num_.evaluate(value) / d;
  r.canonicalize();
  return r;
}

Rational specialize(const RatFun& x, const Rational& value) { return x.specialize(value); }

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// --------------------------------------------------------- quantum numbers

LaurentPoly qint(long k) {
  if (k == 0) return {};
  long m = std::labs(k);
  std::vector<Integer> coefs(static_cast<std::size_t>(2 * m - 1));
  for (std::size_t i = 0; i < coefs.size(); i += 2) coefs[i] = 1;
  LaurentPoly p = LaurentPoly::from_coefficients(static_cast<int>(1 - m), std::move(coefs));
  return k < 0 ? -p : p;
}

LaurentPoly qbinom(long m, long k) {
  if (k < 0) return {};
  LaurentPoly num(1), den(1);
  for (long i = 0; i < k; ++i) {
    num *= qint(m - i);
    den *= qint(i + 1);
  }
  if (num.is_zero()) return {};
  return divide_or_die(num, den);
}

std::optional<std::vector<Integer>> in_delta_basis(const LaurentPoly& p) {
  if (!(p.bar() == p)) return std::nullopt;
  std::vector<Integer> out;
  LaurentPoly rest = p;
  const LaurentPoly delta = LaurentPoly::from_coefficients(-1, {1, 0, 1});
  while (!rest.is_zero()) {
    int d = rest.high();
    if (d < 0 || rest.low() != -d) return std::nullopt;
    if (out.size() < static_cast<std::size_t>(d + 1)) out.resize(static_cast<std::size_t>(d + 1));
    Integer c = rest.leading_coefficient();
    out[static_cast<std::size_t>(d)] = c;
    rest -= LaurentPoly(c) * delta.pow(d);
  }
  return out;
}

// ------------------------------------------------- quantum factorization

namespace {

const LaurentPoly& cyclotomic(int d) {
  static std::vector<LaurentPoly> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= d) {
    int m = static_cast<int>(table.size());
    if (m == 0) {
      table.emplace_back(1);
      continue;
    }
    std::vector<Integer> c(static_cast<std::size_t>(m + 1));
    c[0] = -1;
    c[static_cast<std::size_t>(m)] = 1;
    LaurentPoly p = LaurentPoly::from_coefficients(0, std::move(c));
    for (int e = 1; e < m; ++e)
      if (m % e == 0) p = divide_or_die(p, table[static_cast<std::size_t>(e)]);
    table.push_back(std::move(p));
  }
  return table[static_cast<std::size_t>(d)];
}

// Strips cyclotomic factors; returns multiplicities and the leftover.
std::map<int, int> cyclotomic_multiplicities(LaurentPoly p, LaurentPoly& rest) {
  std::map<int, int> mult;
  p = p.shifted(-p.low());
  int deg = p.high();
  for (int d = 1; d <= deg + 2 && p.high() > 0; ++d) {
    const LaurentPoly& phi = cyclotomic(d);
    if (phi.high() > p.high()) continue;
    while (p.high() >= phi.high()) {
      auto qd = exact_divide(p, phi);
      if (!qd) break;
      p = std::move(*qd);
      ++mult[d];
    }
  }
  rest = p;
  return mult;
}

}  // namespace

std::optional<QuantumFactorization> quantum_factorization(const RatFun& x) {
  if (x.is_zero()) return std::nullopt;
  LaurentPoly rn, rd;
  auto mn = cyclotomic_multiplicities(x.num(), rn);
  auto md = cyclotomic_multiplicities(x.den(), rd);
  if (!rn.is_monomial() || !rd.is_monomial()) return std::nullopt;
  std::map<int, int> m = mn;
  for (const auto& [d, e] : md) m[d] -= e;
  QuantumFactorization f;
  // [k] = q^(1-k) * prod_{d | 2k, d > 2} Phi_d(q)
  for (int d = m.empty() ? 0 : m.rbegin()->first; d >= 3; --d) {
    auto it = m.find(d);
    if (it == m.end() || it->second == 0) continue;
    if (d % 2 != 0) return std::nullopt;
    int e = it->second;
    long k = d / 2;
    f.exponents[k] += e;
    for (int dd = 3; dd <= d; ++dd)
      if ((2 * k) % dd == 0) m[dd] -= e;
  }
  for (const auto& [d, e] : m)
    if (e != 0) return std::nullopt;
  // Compare with the actual value to extract sign and power of q.
  LaurentPoly pn(1), pd(1);
  for (const auto& [k, e] : f.exponents) {
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? pn : pd) *= qint(k);
  }
  RatFun ratio = x / RatFun::make(pn, pd);
  if (!ratio.is_laurent() || !ratio.num().is_monomial()) return std::nullopt;
  const Integer& c = ratio.num().leading_coefficient();
  if (c != 1 && c != -1) return std::nullopt;
  f.sign = c > 0 ? 1 : -1;
  f.shift = ratio.num().low();
  for (auto it = f.exponents.begin(); it != f.exponents.end();) {
    if (it->second == 0) it = f.exponents.erase(it);
    else ++it;
  }
  return f;
}

std::string QuantumFactorization::to_string() const {
  std::ostringstream num, den;
  for (const auto& [k, e] : exponents) {
    std::ostringstream& os = e > 0 ? num : den;
    os << '[' << k << ']';
    if (std::abs(e) > 1) os << '^' << std::abs(e);
  }
  std::string s;
  if (sign < 0) s += "-";
  if (shift != 0) s += "q^" + std::to_string(shift);
  std::string n = num.str(), d = den.str();
  if (n.empty() && shift == 0) n = "1";
  s += n;
  if (!d.empty()) s += "/" + (d.find(']') + 1 < d.size() ? "(" + d + ")" : d);
  return s;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace ladderlab
