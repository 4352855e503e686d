#include "ladderlab/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace ladderlab {

int GlWeight::ones() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 1)); }

unsigned GlWeight::mask() const {
  unsigned m = 0;
  for (int i = 0; i < n(); ++i)
    if (bits[static_cast<std::size_t>(i)]) m |= 1u << i;
  return m;
}

GlWeight GlWeight::from_mask(int n, unsigned mask) {
  GlWeight w;
  w.bits.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return w;
}

GlWeight GlWeight::parse(const std::string& text) {
  GlWeight w;
  for (char c : text) {
    if (c == '0' || c == '1') w.bits.push_back(c - '0');
    else if (c != '(' && c != ')' && c != ' ' && c != ',')
      throw Error(ErrorCode::ParseError, "weight must be a 01-sequence: '" + text + "'");
  }
  if (w.bits.empty()) throw Error(ErrorCode::ParseError, "empty 01-sequence");
  return w;
}

std::string GlWeight::to_string() const {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

int SlWeight::level() const {
  int s = 0;
  for (int c : coords) s += c;
  return s;
}

bool SlWeight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

SlWeight SlWeight::parse(const std::string& text) {
  auto v = parse_int_list(text);
  if (v.empty()) throw Error(ErrorCode::ParseError, "empty weight");
  return SlWeight(v);
}

std::string SlWeight::to_string() const { return int_list_to_string(coords); }

SlWeight operator+(const SlWeight& a, const SlWeight& b) {
  if (a.coords.size() != b.coords.size()) throw Error(ErrorCode::DimensionMismatch, "weights of different rank");
  SlWeight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

SlWeight operator-(const SlWeight& a, const SlWeight& b) {
  if (a.coords.size() != b.coords.size()) throw Error(ErrorCode::DimensionMismatch, "weights of different rank");
  SlWeight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

GlWeight top_weight(int n, int a) {
  GlWeight w;
  w.bits.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < a; ++i) w.bits[static_cast<std::size_t>(i)] = 1;
  return w;
}

SlWeight fundamental(int n, int a) {
  SlWeight w = SlWeight::zero(n);
  if (a >= 1 && a <= n - 1) w.coords[static_cast<std::size_t>(a - 1)] = 1;
  return w;
}

std::vector<GlWeight> omega(int n, int a) {
  std::vector<GlWeight> out;
  GlWeight w = top_weight(n, a);
  // top_weight is the lexicographically largest; prev_permutation walks downward
  do {
    out.push_back(w);
  } while (std::prev_permutation(w.bits.begin(), w.bits.end()));
  return out;
}

SlWeight sl_coords(const GlWeight& mu) {
  SlWeight r = SlWeight::zero(mu.n());
  for (int i = 0; i + 1 < mu.n(); ++i)
    r.coords[static_cast<std::size_t>(i)] = mu.bits[static_cast<std::size_t>(i)] - mu.bits[static_cast<std::size_t>(i + 1)];
  return r;
}

SlWeight operator+(const SlWeight& lambda, const GlWeight& mu) { return lambda + sl_coords(mu); }

int pairing_A(const SlWeight& lambda, const PositiveRoot& alpha) {
  int s = 0;
  for (int k = alpha.i; k < alpha.j; ++k) s += lambda[k] + 1;
  return s;
}

std::vector<PositiveRoot> inversion_set(const GlWeight& mu) {
  std::vector<PositiveRoot> out;
  for (int i = 0; i < mu.n(); ++i)
    for (int j = i + 1; j < mu.n(); ++j)
      if (mu.bits[static_cast<std::size_t>(i)] == 0 && mu.bits[static_cast<std::size_t>(j)] == 1) out.push_back({i + 1, j + 1});
  return out;
}

std::vector<PositiveRoot> positive_roots(int n) {
  std::vector<PositiveRoot> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

bool is_dominant_sum(const SlWeight& lambda, const GlWeight& mu) { return (lambda + mu).is_dominant(); }

bool dominates(const SlWeight& lambda, const SlWeight& nu) {
  SlWeight d = lambda - nu;
  int n = d.n();
  // epsilon coordinates e_k = sum_{i >= k} d_i, scaled by n to centre them
  std::vector<long> e(static_cast<std::size_t>(n), 0);
  for (int k = n - 1; k >= 1; --k) e[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(k)] + d[k];
  long total = 0;
  for (long v : e) total += v;
  long partial = 0;
  for (int j = 0; j < n - 1; ++j) {
    partial += static_cast<long>(n) * e[static_cast<std::size_t>(j)] - total;
    if (partial < 0 || partial % n != 0) return false;
  }
  return true;
}

bool Path::is_full() const {
  for (std::size_t t = 0; t < steps.size(); ++t)
    if (steps[t] != top_weight(n, word[t])) return false;
  return true;
}

std::string Path::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (t) s += ' ';
    s += steps[t].to_string();
  }
  return s;
}

Path make_path(int n, const std::vector<int>& word, const std::vector<GlWeight>& steps) {
  if (word.size() != steps.size()) throw Error(ErrorCode::PathMismatch, "path length differs from word length");
  Path p;
  p.n = n;
  p.word = word;
  p.steps = steps;
  p.prefix.push_back(SlWeight::zero(n));
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (steps[t].n() != n || steps[t].ones() != word[t])
      throw Error(ErrorCode::PathMismatch, "step " + steps[t].to_string() + " is not a weight of letter " + std::to_string(word[t]));
    SlWeight next = p.prefix.back() + steps[t];
    if (!next.is_dominant()) throw Error(ErrorCode::PathMismatch, "prefix weight " + next.to_string() + " is not dominant");
    p.prefix.push_back(next);
  }
  return p;
}

Path full_path(int n, const std::vector<int>& word) {
  std::vector<GlWeight> steps;
  for (int a : word) steps.push_back(top_weight(n, a));
  return make_path(n, word, steps);
}

bool path_dominates(const Path& e, const Path& f) {
  if (e.prefix.size() != f.prefix.size()) return false;
  for (std::size_t t = 0; t < e.prefix.size(); ++t)
    if (!dominates(e.prefix[t], f.prefix[t])) return false;
  return true;
}

std::vector<Path> enumerate_paths(int n, const std::vector<int>& word, const std::optional<SlWeight>& target) {
  for (int a : word)
    if (a < 1 || a > n - 1) throw Error(ErrorCode::InvalidInput, "word letter " + std::to_string(a) + " outside 1.." + std::to_string(n - 1));
  std::vector<std::vector<GlWeight>> choices;
  for (int a : word) choices.push_back(omega(n, a));
  std::vector<Path> out;
  Path cur;
  cur.n = n;
  cur.word = word;
  cur.prefix.push_back(SlWeight::zero(n));
  std::function<void(std::size_t)> dfs = [&](std::size_t t) {
    if (t == word.size()) {
      if (!target || cur.endpoint() == *target) out.push_back(cur);
      return;
    }
    for (const auto& mu : choices[t]) {
      SlWeight next = cur.prefix.back() + mu;
      if (!next.is_dominant()) continue;
      cur.steps.push_back(mu);
      cur.prefix.push_back(next);
      dfs(t + 1);
      cur.steps.pop_back();
      cur.prefix.pop_back();
    }
  };
  dfs(0);
  return out;
}

long path_pair_count(int n, const std::vector<int>& source, const std::vector<int>& target) {
  std::map<SlWeight, long> counts;
  for (const auto& p : enumerate_paths(n, source)) ++counts[p.endpoint()];
  long total = 0;
  for (const auto& p : enumerate_paths(n, target)) {
    auto it = counts.find(p.endpoint());
    if (it != counts.end()) total += it->second;
  }
  return total;
}

ElementaryData elementary_data(const GlWeight& mu) {
  ElementaryData d;
  int n = mu.n(), pos = 0, ones = 0, zeros = 0;
  while (true) {
    while (pos < n && mu.bits[static_cast<std::size_t>(pos)] == 1) {
      ++pos;
      ++ones;
    }
    d.y.push_back(pos);
    d.alpha.push_back(ones);
    if (pos == n) break;
    int start = pos;
    while (pos < n && mu.bits[static_cast<std::size_t>(pos)] == 0) ++pos;
    if (pos == n) break;  // trailing 0-string
    zeros += pos - start;
    d.x.push_back(pos);
    d.beta.push_back(zeros);
  }
  d.k = static_cast<int>(d.x.size());
  for (int i = 0; i < d.k; ++i) {
    auto u = static_cast<std::size_t>(i);
    if (d.alpha[u] + d.beta[u] != d.x[u] || (i > 0 && d.alpha[u] + d.beta[u - 1] != d.y[u]))
      throw std::logic_error("elementary data bookkeeping failed for " + mu.to_string());
  }
  return d;
}

GlWeight weight_from_elementary(int n, const std::vector<int>& y, const std::vector<int>& x) {
  if (y.size() != x.size() + 1) throw Error(ErrorCode::InvalidInput, "need one more y than x");
  GlWeight w;
  w.bits.assign(static_cast<std::size_t>(n), 0);
  int lo = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (int p = lo; p < y[i]; ++p) w.bits[static_cast<std::size_t>(p)] = 1;
    if (i < x.size()) lo = x[i];
  }
  return w;
}

std::vector<int> canonical_sequence(const SlWeight& lambda) {
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
  std::vector<int> seq;
  for (int i = 1; i < lambda.n(); ++i)
    for (int r = 0; r < lambda[i]; ++r) seq.push_back(i);
  return seq;
}

SlWeight word_weight(int n, const std::vector<int>& word) {
  SlWeight w = SlWeight::zero(n);
  for (int a : word) w = w + fundamental(n, a);
  return w;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string int_list_to_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace ladderlab
