#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ladderlab/weights.hpp"

namespace ladderlab {

enum class Tilt { NE, NW };

/// Crossbar between uprights pos and pos+1. NE moves s units of label to the right.
struct Rung {
  int pos = 0;
  Tilt tilt = Tilt::NE;
  int s = 1;
  friend bool operator==(const Rung&, const Rung&) = default;
};

/// Removes boundary uprights labeled 0 or n; entries are (index before removal, label).
struct Strip {
  std::vector<std::pair<int, int>> removed;
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Adds uprights labeled 0 or n; entries are (index after insertion, label).
struct Insert {
  std::vector<std::pair<int, int>> added;
  friend bool operator==(const Insert&, const Insert&) = default;
};

using Step = std::variant<Rung, Strip, Insert>;

enum class RungClass { Inward, Outward, Neutral };

const char* tilt_name(Tilt t);
const char* rung_class_name(RungClass c);

/// Labels after applying a rung; throws LabelOutOfRange.
std::pair<int, int> rung_outputs(int n, int a, int b, const Rung& rung);
RungClass classify_rung(int n, int a, int b, const Rung& rung);

/// A ladder read bottom to top.
struct Ladder {
  int n = 0;
  std::vector<int> bottom;
  std::vector<Step> steps;

  static Ladder identity(int n, std::vector<int> labels);

  /// Label sequence after each step; levels()[0] is the bottom. Throws on invalid steps.
  std::vector<std::vector<int>> levels() const;
  std::vector<int> top() const;
  std::size_t rung_count() const;
  bool has_only_rungs() const;
  void validate() const;

  Ladder& then(const Rung& r);
  Ladder& then(const Step& s);
  /// Appends L on top of this ladder; boundaries must agree.
  Ladder& then(const Ladder& L);

  friend bool operator==(const Ladder&, const Ladder&) = default;
};

Ladder flip(const Ladder& L);
/// Tensor with identity strands on either side.
Ladder with_identity(const Ladder& L, const std::vector<int>& left, const std::vector<int>& right);

/// Bubble sort by adjacent neutral rungs. Throws NotAPermutation.
Ladder neutral_sort(int n, const std::vector<int>& bottom, const std::vector<int>& target);
Ladder elementary_ladder(const GlWeight& mu);

/// Strip of all 0/n labels in a sequence (empty step list if there are none).
Ladder strip_labels(int n, const std::vector<int>& labels);

/// One tier of a light ladder: from canonical_sequence(lambda) + (a) to canonical_sequence(lambda + mu).
Ladder tier_ladder(const SlWeight& lambda, int a, const GlWeight& mu);
/// The same tier starting from another ordering `seq` of the letters of lambda.
Ladder tier_ladder_on(const std::vector<int>& seq, const SlWeight& lambda, int a, const GlWeight& mu);
Ladder light_ladder(const Path& path);
/// flip(light_ladder(f)) stacked on light_ladder(e).
Ladder double_ladder(const Path& e, const Path& f);

struct StrippedLadder {
  Ladder ladder;
  std::vector<int> bottom_kept;  // indices of the original bottom that survive
  std::vector<int> top_kept;
};
StrippedLadder strip_trivial(const Ladder& L);

}  // namespace ladderlab
