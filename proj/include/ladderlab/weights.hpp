#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/error.hpp"

namespace ladderlab {

/// Weight of a fundamental representation, as a 01-sequence of length n.
struct GlWeight {
  std::vector<int> bits;

  int n() const { return static_cast<int>(bits.size()); }
  int ones() const;
  /// Subset of {1..n} as a bitmask (bit i-1 set iff i is in the subset).
  unsigned mask() const;
  static GlWeight from_mask(int n, unsigned mask);
  static GlWeight parse(const std::string& text);
  std::string to_string() const;

  friend auto operator<=>(const GlWeight&, const GlWeight&) = default;
};

/// sl_n weight in fundamental-weight coordinates (n-1 entries).
struct SlWeight {
  std::vector<int> coords;

  SlWeight() = default;
  explicit SlWeight(std::vector<int> c) : coords(std::move(c)) {}
  static SlWeight zero(int n) { return SlWeight(std::vector<int>(static_cast<std::size_t>(n - 1), 0)); }

  int n() const { return static_cast<int>(coords.size()) + 1; }
  int level() const;
  int operator[](int i) const { return coords[static_cast<std::size_t>(i - 1)]; }  // 1-based
  bool is_dominant() const;
  static SlWeight parse(const std::string& text);
  std::string to_string() const;

  friend SlWeight operator+(const SlWeight& a, const SlWeight& b);
  friend SlWeight operator-(const SlWeight& a, const SlWeight& b);
  friend auto operator<=>(const SlWeight&, const SlWeight&) = default;
};

/// The positive root e_i - e_j, 1 <= i < j <= n.
struct PositiveRoot {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Highest weight 1^a 0^(n-a) of the a-th fundamental representation.
GlWeight top_weight(int n, int a);
/// The fundamental weight w_a as an sl_n weight; w_0 and w_n are zero.
SlWeight fundamental(int n, int a);
/// All weights of the a-th fundamental representation, in descending lexicographic order.
std::vector<GlWeight> omega(int n, int a);

SlWeight sl_coords(const GlWeight& mu);
SlWeight operator+(const SlWeight& lambda, const GlWeight& mu);
int pairing_A(const SlWeight& lambda, const PositiveRoot& alpha);
std::vector<PositiveRoot> inversion_set(const GlWeight& mu);
std::vector<PositiveRoot> positive_roots(int n);
bool is_dominant_sum(const SlWeight& lambda, const GlWeight& mu);
/// lambda >= nu in the dominance order (lambda - nu a nonnegative sum of simple roots).
bool dominates(const SlWeight& lambda, const SlWeight& nu);

/// A dominant weight subsequence of a word of fundamental indices.
struct Path {
  int n = 0;
  std::vector<int> word;
  std::vector<GlWeight> steps;
  std::vector<SlWeight> prefix;  // prefix[0] = 0, prefix[t] after t steps

  const SlWeight& endpoint() const { return prefix.back(); }
  bool is_full() const;
  std::string to_string() const;
  friend bool operator==(const Path& a, const Path& b) { return a.steps == b.steps && a.word == b.word; }
};

/// Builds a path from explicit steps, checking dominance of every prefix.
Path make_path(int n, const std::vector<int>& word, const std::vector<GlWeight>& steps);
/// The path taking the highest weight at every letter.
Path full_path(int n, const std::vector<int>& word);
/// e >= f in the path dominance order: prefix weights compared termwise.
bool path_dominates(const Path& e, const Path& f);

std::vector<Path> enumerate_paths(int n, const std::vector<int>& word,
                                  const std::optional<SlWeight>& target = std::nullopt);
/// Number of pairs of paths of the two words with equal endpoints.
long path_pair_count(int n, const std::vector<int>& source, const std::vector<int>& target);

struct ElementaryData {
  int k = 0;
  std::vector<int> y;      // k+1 entries
  std::vector<int> x;      // k entries
  std::vector<int> alpha;  // k+1 entries
  std::vector<int> beta;   // k entries
};
ElementaryData elementary_data(const GlWeight& mu);
/// Inverse of elementary_data.
GlWeight weight_from_elementary(int n, const std::vector<int>& y, const std::vector<int>& x);

/// Fundamental indices of lambda, index i repeated lambda_i times, weakly increasing.
std::vector<int> canonical_sequence(const SlWeight& lambda);
/// Sum of fundamental weights of a word.
SlWeight word_weight(int n, const std::vector<int>& word);

std::vector<int> parse_int_list(const std::string& text);
std::string int_list_to_string(const std::vector<int>& v);

}  // namespace ladderlab
