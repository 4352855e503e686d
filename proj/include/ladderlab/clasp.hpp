#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/eval.hpp"
#include "ladderlab/weights.hpp"

namespace ladderlab {

/// The clasp of lambda on canonical_sequence(lambda).
struct ClaspRecord {
  SlWeight lambda;
  std::vector<int> sequence;
  EvalMatrix matrix;
  long rank = 0;
};

enum class KappaMethod { Matrix, Conjecture, Recursive };
const char* kappa_method_name(KappaMethod m);

struct KappaValue {
  SlWeight lambda;
  GlWeight mu;
  RatFun value;
  KappaMethod method = KappaMethod::Matrix;
};

struct ClaspCheck {
  bool idempotent = false;
  bool annihilated = false;  // by every single outward rung, on both sides
  bool top_entry_one = false;
  bool trace_matches = false;
  long trace = 0;
  long weyl = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SweepRow {
  int n = 0;
  SlWeight lambda;
  GlWeight mu;
  std::optional<RatFun> matrix, conjecture, recursive;
  std::string error;
  bool agree = false;
};

/// Memoizing clasp and intersection form computations; thread safe.
/// With a cache directory, clasps and kappa values persist between runs.
class ClaspEngine {
public:
  explicit ClaspEngine(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
  /// Dimension above which kappa_matrix and gamma switch from full matrices to the x_top vector.
  void set_matrix_limit(std::uint64_t limit) { matrix_limit_ = limit; }
  std::uint64_t matrix_limit() const { return matrix_limit_; }

  std::shared_ptr<const ClaspRecord> clasp(const SlWeight& lambda);
  /// Scalar of E * Ebar on x_top; needs only the clasp of lambda.
  RatFun kappa_vector(const SlWeight& lambda, const GlWeight& mu);
  RatFun kappa_matrix(const SlWeight& lambda, const GlWeight& mu);
  RatFun kappa_recursive(const SlWeight& lambda, const GlWeight& mu);
  RatFun gamma(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu);

  std::size_t memo_size() const;

private:
  std::shared_ptr<const ClaspRecord> build_clasp(const SlWeight& lambda);
  RatFun recursive_impl(const SlWeight& lambda, const GlWeight& mu, std::vector<std::string>& stack);
  std::optional<RatFun> load_kappa(const std::string& key);
  void store_kappa(const std::string& key, const RatFun& value);

  std::optional<std::filesystem::path> cache_dir_;
  std::uint64_t matrix_limit_ = 300;
  mutable std::mutex mu_;
  std::map<SlWeight, std::shared_ptr<const ClaspRecord>> clasps_;
  std::map<std::string, RatFun> kappas_;
};

/// Engine used by the free functions below; no disk cache unless configured.
ClaspEngine& default_engine();
void configure_default_engine(std::optional<std::filesystem::path> cache_dir);

ClaspRecord compute_clasp(const SlWeight& lambda);
/// Independent solve for the clasp over the double ladder basis.
EvalMatrix clasp_oracle(const SlWeight& lambda);
RatFun kappa_matrix(const SlWeight& lambda, const GlWeight& mu);
/// Product over the inversion set of [A(lambda,alpha)] / [A(lambda,alpha) - 1].
RatFun kappa_conjecture(const SlWeight& lambda, const GlWeight& mu);
/// The same product written with [A(lambda + mu, alpha)] in the denominator.
RatFun kappa_conjecture_shifted(const SlWeight& lambda, const GlWeight& mu);
RatFun kappa_recursive(const SlWeight& lambda, const GlWeight& mu);
RatFun gamma(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu);
/// Kappa from the table of gamma values used by kappa_recursive (n <= 4).
RatFun gamma_table(const SlWeight& lambda, const GlWeight& mu, const GlWeight& nu,
                   const std::function<RatFun(const SlWeight&, const GlWeight&)>& kappa);

RatFun weyl_dim(const SlWeight& lambda);
Integer weyl_dim_at_one(const SlWeight& lambda);

/// mu + w_b - nu when it is a 01-sequence.
std::optional<GlWeight> gamma_sigma(const GlWeight& mu, int b, const GlWeight& nu);
/// mu with its last 1-string removed (a weight of the alpha_k-th representation).
GlWeight mu_minus(const GlWeight& mu);

/// Idempotence, outward annihilation, normalization and trace.
ClaspCheck check_clasp(const ClaspRecord& P);

/// Both sides of the first recursive formula for kappa, with gamma from matrices.
struct RecursionCheck {
  RatFun lhs;
  RatFun rhs;
  bool holds = false;
  std::vector<std::string> terms;
};
RecursionCheck check_recursion(const SlWeight& lambda, const GlWeight& mu);

std::vector<SlWeight> dominant_weights(int n, int level_bound);
/// Pairs (lambda, mu) with lambda dominant of level <= bound and lambda + mu dominant.
std::vector<std::pair<SlWeight, GlWeight>> kappa_domain(int n, int level_bound);
std::vector<SweepRow> conjecture_sweep(int n, int level_bound, int jobs = 1, bool with_matrix = true);

}  // namespace ladderlab
