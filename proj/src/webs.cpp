#include "ladderlab/webs.hpp"

#include <algorithm>

namespace ladderlab {

const char* tilt_name(Tilt t) { return t == Tilt::NE ? "NE" : "NW"; }

const char* rung_class_name(RungClass c) {
  switch (c) {
    case RungClass::Inward: return "inward";
    case RungClass::Outward: return "outward";
    case RungClass::Neutral: return "neutral";
  }
  return "?";
}

std::pair<int, int> rung_outputs(int n, int a, int b, const Rung& rung) {
  auto in_range = [n](int v) { return v >= 0 && v <= n; };
  if (!in_range(a) || !in_range(b) || rung.s < 0)
    throw Error(ErrorCode::LabelOutOfRange, "rung input labels out of range");
  int c = rung.tilt == Tilt::NE ? a - rung.s : a + rung.s;
  int d = rung.tilt == Tilt::NE ? b + rung.s : b - rung.s;
  if (!in_range(c) || !in_range(d))
    throw Error(ErrorCode::LabelOutOfRange, std::string(tilt_name(rung.tilt)) + " rung with s=" + std::to_string(rung.s) +
                                                " sends (" + std::to_string(a) + "," + std::to_string(b) + ") outside [0," +
                                                std::to_string(n) + "]");
  return {c, d};
}

RungClass classify_rung(int n, int a, int b, const Rung& rung) {
  auto [c, d] = rung_outputs(n, a, b, rung);
  if (std::minmax(a, b) == std::minmax(c, d)) return RungClass::Neutral;
  if (std::min(c, d) <= std::min(a, b) && std::max(a, b) <= std::max(c, d)) return RungClass::Outward;
  return RungClass::Inward;
}

Ladder Ladder::identity(int n, std::vector<int> labels) {
  Ladder L;
  L.n = n;
  L.bottom = std::move(labels);
  return L;
}

namespace {

void apply_step(int n, std::vector<int>& cur, const Step& step) {
  if (const auto* r = std::get_if<Rung>(&step)) {
    if (r->pos < 0 || r->pos + 1 >= static_cast<int>(cur.size()))
      throw Error(ErrorCode::LabelOutOfRange, "rung position " + std::to_string(r->pos) + " outside the ladder");
    auto p = static_cast<std::size_t>(r->pos);
    auto [c, d] = rung_outputs(n, cur[p], cur[p + 1], *r);
    cur[p] = c;
    cur[p + 1] = d;
  } else if (const auto* s = std::get_if<Strip>(&step)) {
    std::vector<bool> drop(cur.size(), false);
    for (auto [idx, label] : s->removed) {
      if (idx < 0 || idx >= static_cast<int>(cur.size()) || cur[static_cast<std::size_t>(idx)] != label || (label != 0 && label != n))
        throw Error(ErrorCode::LabelOutOfRange, "strip of a strand that is not labeled 0 or n");
      drop[static_cast<std::size_t>(idx)] = true;
    }
    std::vector<int> next;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (!drop[i]) next.push_back(cur[i]);
    cur = std::move(next);
  } else {
    const auto& ins = std::get<Insert>(step);
    std::size_t total = cur.size() + ins.added.size();
    std::vector<int> next(total, -1);
    for (auto [idx, label] : ins.added) {
      if (idx < 0 || idx >= static_cast<int>(total) || (label != 0 && label != n) || next[static_cast<std::size_t>(idx)] != -1)
        throw Error(ErrorCode::LabelOutOfRange, "invalid insertion of a 0/n strand");
      next[static_cast<std::size_t>(idx)] = label;
    }
    std::size_t j = 0;
    for (auto& v : next)
      if (v == -1) v = cur[j++];
    cur = std::move(next);
  }
}

}  // namespace

std::vector<std::vector<int>> Ladder::levels() const {
  for (int v : bottom)
    if (v < 0 || v > n) throw Error(ErrorCode::LabelOutOfRange, "bottom label " + std::to_string(v) + " outside [0,n]");
  std::vector<std::vector<int>> out{bottom};
  std::vector<int> cur = bottom;
  for (const auto& s : steps) {
    apply_step(n, cur, s);
    out.push_back(cur);
  }
  return out;
}

std::vector<int> Ladder::top() const {
  std::vector<int> cur = bottom;
  for (const auto& s : steps) apply_step(n, cur, s);
  return cur;
}

std::size_t Ladder::rung_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const Step& s) { return std::holds_alternative<Rung>(s); }));
}

bool Ladder::has_only_rungs() const { return rung_count() == steps.size(); }

void Ladder::validate() const {
  if (n < 1) throw Error(ErrorCode::ValidationError, "ladder rank must be positive");
  auto lv = levels();
  auto sum = [](const std::vector<int>& v) {
    long s = 0;
    for (int x : v) s += x;
    return s;
  };
  long s0 = sum(lv.front());
  for (const auto& l : lv)
    if ((sum(l) - s0) % n != 0) throw Error(ErrorCode::ValidationError, "label sum not conserved");
  if (has_only_rungs() && sum(lv.back()) != s0) throw Error(ErrorCode::ValidationError, "label sum not conserved");
}

Ladder& Ladder::then(const Rung& r) { return then(Step{r}); }

Ladder& Ladder::then(const Step& s) {
  steps.push_back(s);
  return *this;
}

Ladder& Ladder::then(const Ladder& L) {
  if (L.n != n || L.bottom != top()) throw Error(ErrorCode::DimensionMismatch, "ladder boundaries do not agree");
  steps.insert(steps.end(), L.steps.begin(), L.steps.end());
  return *this;
}

Ladder flip(const Ladder& L) {
  Ladder F;
  F.n = L.n;
  F.bottom = L.top();
  for (auto it = L.steps.rbegin(); it != L.steps.rend(); ++it) {
    if (const auto* r = std::get_if<Rung>(&*it)) {
      Rung f = *r;
      f.tilt = r->tilt == Tilt::NE ? Tilt::NW : Tilt::NE;
      F.steps.emplace_back(f);
    } else if (const auto* s = std::get_if<Strip>(&*it)) {
      F.steps.emplace_back(Insert{s->removed});
    } else {
      F.steps.emplace_back(Strip{std::get<Insert>(*it).added});
    }
  }
  return F;
}

Ladder with_identity(const Ladder& L, const std::vector<int>& left, const std::vector<int>& right) {
  Ladder out;
  out.n = L.n;
  out.bottom = left;
  out.bottom.insert(out.bottom.end(), L.bottom.begin(), L.bottom.end());
  out.bottom.insert(out.bottom.end(), right.begin(), right.end());
  int off = static_cast<int>(left.size());
  for (const auto& s : L.steps) {
    if (const auto* r = std::get_if<Rung>(&s)) {
      Rung m = *r;
      m.pos += off;
      out.steps.emplace_back(m);
    } else if (const auto* st = std::get_if<Strip>(&s)) {
      Strip m = *st;
      for (auto& e : m.removed) e.first += off;
      out.steps.emplace_back(m);
    } else {
      Insert m = std::get<Insert>(s);
      for (auto& e : m.added) e.first += off;
      out.steps.emplace_back(m);
    }
  }
  return out;
}

Ladder neutral_sort(int n, const std::vector<int>& bottom, const std::vector<int>& target) {
  if (!std::is_permutation(bottom.begin(), bottom.end(), target.begin(), target.end()))
    throw Error(ErrorCode::NotAPermutation, "target (" + int_list_to_string(target) + ") is not a reordering of (" +
                                                int_list_to_string(bottom) + ")");
  Ladder L = Ladder::identity(n, bottom);
  std::vector<int> cur = bottom;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    std::size_t j = i;
    while (cur[j] != target[i]) ++j;
    for (std::size_t p = j; p > i; --p) {
      int a = cur[p - 1], b = cur[p];
      if (a > b) L.then(Rung{static_cast<int>(p - 1), Tilt::NE, a - b});
      else if (a < b) L.then(Rung{static_cast<int>(p - 1), Tilt::NW, b - a});
      std::swap(cur[p - 1], cur[p]);
    }
  }
  return L;
}

Ladder elementary_ladder(const GlWeight& mu) {
  int a = mu.ones();
  if (a == 0) throw Error(ErrorCode::InvalidWeight, "the zero weight has no elementary light ladder");
  ElementaryData d = elementary_data(mu);
  Ladder L = Ladder::identity(mu.n(), d.x);
  L.bottom.push_back(a);
  for (int i = d.k; i >= 1; --i) L.then(Rung{i - 1, Tilt::NE, d.beta[static_cast<std::size_t>(i - 1)]});
  if (L.top() != d.y) throw std::logic_error("elementary light ladder top mismatch for " + mu.to_string());
  return L;
}

Ladder strip_labels(int n, const std::vector<int>& labels) {
  Ladder L = Ladder::identity(n, labels);
  Strip s;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == 0 || labels[i] == n) s.removed.emplace_back(static_cast<int>(i), labels[i]);
  if (!s.removed.empty()) L.then(Step{s});
  return L;
}

Ladder tier_ladder(const SlWeight& lambda, int a, const GlWeight& mu) {
  return tier_ladder_on(canonical_sequence(lambda), lambda, a, mu);
}

Ladder tier_ladder_on(const std::vector<int>& canon, const SlWeight& lambda, int a, const GlWeight& mu) {
  int n = lambda.n();
  if (mu.n() != n || mu.ones() != a) throw Error(ErrorCode::PathMismatch, "step is not a weight of the letter");
  SlWeight next = lambda + mu;
  if (!next.is_dominant()) throw Error(ErrorCode::PathMismatch, lambda.to_string() + " + " + mu.to_string() + " is not dominant");
  if (word_weight(n, canon) != lambda)
    throw Error(ErrorCode::PathMismatch, "(" + int_list_to_string(canon) + ") does not have weight " + lambda.to_string());
  ElementaryData d = elementary_data(mu);
  // rightmost copies of x_1 < ... < x_k move to the right end of the prefix
  std::vector<int> rest = canon;
  for (int i = d.k - 1; i >= 0; --i) {
    auto it = std::find(rest.rbegin(), rest.rend(), d.x[static_cast<std::size_t>(i)]);
    if (it == rest.rend())
      throw Error(ErrorCode::PathMismatch, "label " + std::to_string(d.x[static_cast<std::size_t>(i)]) + " absent from (" +
                                               int_list_to_string(canon) + ")");
    rest.erase(std::next(it).base());
  }
  std::vector<int> arranged = rest;
  arranged.insert(arranged.end(), d.x.begin(), d.x.end());

  Ladder L = with_identity(neutral_sort(n, canon, arranged), {}, {a});
  L.then(with_identity(elementary_ladder(mu), rest, {}));
  L.then(strip_labels(n, L.top()));
  L.then(neutral_sort(n, L.top(), canonical_sequence(next)));
  return L;
}

Ladder light_ladder(const Path& path) {
  int n = path.n;
  Ladder L = Ladder::identity(n, {});
  L.bottom = path.word;
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    std::vector<int> right(path.word.begin() + static_cast<std::ptrdiff_t>(t + 1), path.word.end());
    L.then(with_identity(tier_ladder(path.prefix[t], path.word[t], path.steps[t]), {}, right));
  }
  return L;
}

Ladder double_ladder(const Path& e, const Path& f) {
  if (e.endpoint() != f.endpoint())
    throw Error(ErrorCode::WeightMismatch, "paths end at " + e.endpoint().to_string() + " and " + f.endpoint().to_string());
  Ladder L = light_ladder(e);
  L.then(flip(light_ladder(f)));
  return L;
}

StrippedLadder strip_trivial(const Ladder& L) {
  StrippedLadder out;
  out.ladder.n = L.n;
  Insert ins;
  for (std::size_t i = 0; i < L.bottom.size(); ++i) {
    int v = L.bottom[i];
    if (v == 0 || v == L.n) ins.added.emplace_back(static_cast<int>(i), v);
    else {
      out.ladder.bottom.push_back(v);
      out.bottom_kept.push_back(static_cast<int>(i));
    }
  }
  if (!ins.added.empty()) out.ladder.steps.emplace_back(ins);
  out.ladder.steps.insert(out.ladder.steps.end(), L.steps.begin(), L.steps.end());
  std::vector<int> top = L.top();
  Strip st;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] == 0 || top[i] == L.n) st.removed.emplace_back(static_cast<int>(i), top[i]);
    else out.top_kept.push_back(static_cast<int>(i));
  }
  if (!st.removed.empty()) out.ladder.steps.emplace_back(st);
  return out;
}

}  // namespace ladderlab
