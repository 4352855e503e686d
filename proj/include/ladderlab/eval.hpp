#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/qring.hpp"
#include "ladderlab/sparse_matrix.hpp"
#include "ladderlab/webs.hpp"
#include "ladderlab/weights.hpp"

namespace ladderlab {

/// Number of pairs i < j with i in S and j in T.
int ell(unsigned S, unsigned T);
/// Subsets of {1..n} of size a as bitmasks, colexicographic order.
const std::vector<unsigned>& subsets(int n, int a);
Index subset_index(int n, unsigned mask);
std::string subset_to_string(unsigned mask);

/// Basis of V_{w_1} (x) ... (x) V_{w_d}: tuples of subsets, row-major (last factor fastest).
class TensorBasis {
public:
  TensorBasis(int n, std::vector<int> labels);

  int n() const { return n_; }
  const std::vector<int>& labels() const { return labels_; }
  Index size() const { return size_; }
  Index index(const std::vector<unsigned>& masks) const;
  std::vector<unsigned> masks(Index idx) const;
  /// The highest weight vector x_top: each factor at its initial segment.
  Index top_index() const;
  std::string describe(Index idx) const;

private:
  int n_;
  std::vector<int> labels_;
  std::vector<Index> dims_;
  Index size_ = 1;
};

/// Tensor dimension without building the basis; saturates at UINT64_MAX.
std::uint64_t tensor_dimension(int n, const std::vector<int>& labels);

using LaurentMatrix = SparseMatrix<LaurentPoly>;
using EvalMatrix = SparseMatrix<RatFun>;
using QMatrix = SparseMatrix<Rational>;

LaurentMatrix merge_matrix(int n, int a, int b);
LaurentMatrix split_matrix(int n, int a, int b);
LaurentMatrix eval_rung(int n, int left, int right, const Rung& rung);
LaurentMatrix eval_ladder(const Ladder& L);

/// Pushes a vector of the bottom space through the ladder.
SparseVec<LaurentPoly> apply_ladder(const Ladder& L, const SparseVec<LaurentPoly>& v);
SparseVec<RatFun> apply_ladder(const Ladder& L, const SparseVec<RatFun>& v);
/// eval(L) * M, computed column by column.
EvalMatrix apply_ladder(const Ladder& L, const EvalMatrix& M);
/// M * eval(L).
EvalMatrix compose_ladder(const EvalMatrix& M, const Ladder& L);

EvalMatrix to_ratfun(const LaurentMatrix& M);
QMatrix specialize(const EvalMatrix& M, const Rational& value);
QMatrix specialize(const LaurentMatrix& M, const Rational& value);

// ------------------------------------------------------------ relations

struct RelationCase {
  std::string relation;
  std::vector<int> labels;
  bool passed = false;
  std::string detail;
};

/// Relation identifiers understood by check_relation.
const std::vector<std::string>& relation_names();
/// Number of integer labels each relation takes.
int relation_arity(const std::string& relation);
/// Evaluates both sides and compares exactly. Throws InvalidPattern if the left side is not a valid ladder.
RelationCase check_relation(const std::string& relation, const std::vector<int>& labels, int n);
/// All admissible label tuples with entries in [0, n].
std::vector<RelationCase> relation_sweep(const std::string& relation, int n);
/// Scalar by which a closed or bigon ladder acts, if it acts by a scalar.
std::optional<LaurentPoly> scalar_of(const LaurentMatrix& M);

// --------------------------------------------------------- triangularity

struct TriangularityReport {
  std::size_t checks = 0;
  std::size_t below_reaching_top = 0;  // pairs f < e with a nonzero x_top coefficient
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Light ladder action on the dominant subbasis and neutral ladder action on x_top.
TriangularityReport triangularity_report(int n, const std::vector<int>& word);

// ------------------------------------------------------------------ rank

struct HomRankResult {
  long rank = 0;
  long expected = 0;
  bool conclusive = false;
  std::vector<long> ranks_per_point;
};

/// Rank over Q of a list of sparse rows.
long rational_rank(std::vector<SparseVec<Rational>> rows);
/// Rank of the double ladders source -> target, certified at `points` rational values of q.
HomRankResult hom_rank(int n, const std::vector<int>& source, const std::vector<int>& target, unsigned seed = 1,
                       int points = 3);

}  // namespace ladderlab
