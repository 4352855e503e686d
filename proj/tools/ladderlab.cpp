#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ladderlab/clasp.hpp"
#include "ladderlab/eval.hpp"
#include "ladderlab/io.hpp"

using namespace ladderlab;

namespace {

struct Options {
  int n = 0;
  std::string lambda, mu, nu, word, target, method = "all", format = "json", at, cache_dir, ladder, relation;
  int level_bound = 2;
  int jobs = 1;
  long k = 0, m = 0;
  bool count = false, check = false, oracle = false, no_matrix = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;
  int status = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.json.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_field(row[i]);
      return s;
    };
    std::cout << line(out.csv_header) << "\n";
    for (const auto& r : out.csv_rows) std::cout << line(r) << "\n";
  } else {
    for (const auto& l : out.text) std::cout << l << "\n";
  }
}

void require_n(const Options& o) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
}

SlWeight lambda_of(const Options& o) {
  require_n(o);
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  SlWeight l = SlWeight::parse(o.lambda);
  if (l.n() != o.n) throw UsageError("--lambda needs " + std::to_string(o.n - 1) + " coordinates for n=" + std::to_string(o.n));
  if (!l.is_dominant()) throw UsageError("--lambda " + o.lambda + " is not dominant");
  return l;
}

GlWeight letter_of(const Options& o, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  GlWeight w = GlWeight::parse(text);
  if (w.n() != o.n) throw UsageError(std::string(flag) + " must be a 01-sequence of length " + std::to_string(o.n));
  return w;
}

std::vector<int> word_of(const Options& o, const std::string& text, const char* flag) {
  require_n(o);
  std::vector<int> w = text.empty() ? std::vector<int>{} : parse_int_list(text);
  for (int v : w)
    if (v < 1 || v >= o.n) throw UsageError(std::string(flag) + " entries must lie in 1.." + std::to_string(o.n - 1));
  return w;
}

std::optional<Rational> at_of(const Options& o) {
  if (o.at.empty()) return std::nullopt;
  std::string t = o.at;
  if (t.rfind("q=", 0) == 0) t = t.substr(2);
  try {
    return parse_rational(t);
  } catch (const Error&) {
    throw UsageError("--at expects q=RATIONAL, got " + o.at);
  }
}

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string render(const RatFun& x, const std::optional<Rational>& at) {
  return at ? rational_string(x.specialize(*at)) : x.to_string();
}

std::string render(const LaurentPoly& x, const std::optional<Rational>& at) {
  return at ? rational_string(x.evaluate(*at)) : x.to_string();
}

Json value_or_null(const std::optional<RatFun>& x, const std::optional<Rational>& at) {
  return x ? Json(render(*x, at)) : Json(nullptr);
}

Json matrix_json(const EvalMatrix& M, const std::optional<Rational>& at) {
  if (!at) return matrix_to_json(M);
  Json entries = Json::array();
  for (const auto& [i, j, x] : M.triplets()) {
    Rational v = x.specialize(*at);
    if (v != 0) entries.push_back(Json::array({i, j, rational_string(v)}));
  }
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}, {"q", rational_string(*at)}};
}

// ------------------------------------------------------------ commands

Output cmd_qnum(const Options& o) {
  auto at = at_of(o);
  LaurentPoly v = qint(o.k);
  Output out;
  out.json = {{"k", o.k}, {"value", render(v, at)}};
  out.csv_header = {"k", "value"};
  out.csv_rows = {{std::to_string(o.k), render(v, at)}};
  out.text = {render(v, at)};
  return out;
}

Output cmd_qbinom(const Options& o) {
  auto at = at_of(o);
  LaurentPoly v = qbinom(o.m, o.k);
  Output out;
  out.json = {{"m", o.m}, {"k", o.k}, {"value", render(v, at)}};
  out.csv_header = {"m", "k", "value"};
  out.csv_rows = {{std::to_string(o.m), std::to_string(o.k), render(v, at)}};
  out.text = {render(v, at)};
  return out;
}

Output cmd_paths(const Options& o) {
  std::vector<int> word = word_of(o, o.word, "--word");
  std::optional<SlWeight> target;
  if (!o.target.empty()) {
    target = SlWeight::parse(o.target);
    if (target->coords.size() == 1 && target->coords[0] == 0 && o.n > 2) target = SlWeight::zero(o.n);
    if (target->n() != o.n) throw UsageError("--target needs " + std::to_string(o.n - 1) + " coordinates");
  }
  auto paths = enumerate_paths(o.n, word, target);
  Output out;
  out.json = {{"n", o.n}, {"word", word}, {"count", paths.size()}};
  if (target) out.json["target"] = target->coords;
  out.csv_header = {"path", "endpoint"};
  if (o.count) {
    out.text = {std::to_string(paths.size())};
    out.csv_header = {"count"};
    out.csv_rows = {{std::to_string(paths.size())}};
    return out;
  }
  Json list = Json::array();
  for (const auto& p : paths) {
    Json steps = Json::array();
    for (const auto& s : p.steps) steps.push_back(s.to_string());
    list.push_back(Json{{"steps", steps}, {"endpoint", p.endpoint().coords}});
    out.csv_rows.push_back({p.to_string(), p.endpoint().to_string()});
    out.text.push_back(p.to_string() + " -> (" + p.endpoint().to_string() + ")");
  }
  out.json["paths"] = list;
  return out;
}

Output cmd_eval(const Options& o) {
  if (o.ladder.empty()) throw UsageError("--ladder FILE is required");
  Ladder L = load_ladder(o.ladder);
  auto at = at_of(o);
  EvalMatrix M = to_ratfun(eval_ladder(L));
  Output out;
  out.json = {{"n", L.n}, {"bottom", L.bottom}, {"top", L.top()}, {"matrix", matrix_json(M, at)}};
  out.csv_header = {"row", "col", "value"};
  for (const auto& [i, j, x] : M.triplets()) {
    std::string v = render(x, at);
    if (at && v == "0") continue;
    out.csv_rows.push_back({std::to_string(i), std::to_string(j), v});
    out.text.push_back(std::to_string(i) + " " + std::to_string(j) + " " + v);
  }
  return out;
}

Output cmd_relcheck(const Options& o) {
  require_n(o);
  std::vector<std::string> names = relation_names();
  if (!o.relation.empty()) {
    if (std::find(names.begin(), names.end(), o.relation) == names.end()) throw UsageError("unknown relation " + o.relation);
    names = {o.relation};
  }
  Output out;
  Json cases = Json::array();
  std::size_t failed = 0, total = 0;
  out.csv_header = {"relation", "labels", "passed", "detail"};
  for (const auto& name : names) {
    for (const auto& c : relation_sweep(name, o.n)) {
      ++total;
      if (!c.passed) ++failed;
      cases.push_back(Json{{"relation", c.relation}, {"labels", c.labels}, {"passed", c.passed}, {"detail", c.detail}});
      out.csv_rows.push_back({c.relation, int_list_to_string(c.labels), c.passed ? "true" : "false", c.detail});
      if (!c.passed) out.text.push_back("FAIL " + c.relation + " (" + int_list_to_string(c.labels) + ") " + c.detail);
    }
  }
  out.text.push_back(std::to_string(total - failed) + "/" + std::to_string(total) + " relation cases pass for n=" + std::to_string(o.n));
  out.json = {{"n", o.n}, {"total", total}, {"failed", failed}, {"cases", cases}};
  out.status = failed ? 1 : 0;
  return out;
}

Output cmd_clasp(const Options& o) {
  SlWeight lambda = lambda_of(o);
  auto at = at_of(o);
  auto P = default_engine().clasp(lambda);
  Output out;
  out.json = {{"n", o.n},
              {"lambda", lambda.coords},
              {"sequence", P->sequence},
              {"rank", P->rank},
              {"dimension", P->matrix.rows()},
              {"matrix", matrix_json(P->matrix, at)}};
  out.text = {"clasp (" + lambda.to_string() + ") on (" + int_list_to_string(P->sequence) + "): dimension " +
              std::to_string(P->matrix.rows()) + ", rank " + std::to_string(P->rank)};
  out.csv_header = {"row", "col", "value"};
  for (const auto& [i, j, x] : P->matrix.triplets())
    out.csv_rows.push_back({std::to_string(i), std::to_string(j), render(x, at)});
  if (o.check) {
    ClaspCheck c = check_clasp(*P);
    out.json["check"] = {{"idempotent", c.idempotent},
                         {"outward_annihilation", c.annihilated},
                         {"top_entry_one", c.top_entry_one},
                         {"trace_matches", c.trace_matches},
                         {"failures", c.failures}};
    out.text.push_back(c.passed() ? "checks pass" : "checks FAIL");
    for (const auto& f : c.failures) out.text.push_back("  " + f);
    if (!c.passed()) out.status = 1;
  }
  if (o.oracle) {
    bool same = clasp_oracle(lambda) == P->matrix;
    out.json["oracle_agrees"] = same;
    out.text.push_back(same ? "oracle agrees" : "oracle DISAGREES");
    if (!same) out.status = 1;
  }
  return out;
}

const std::vector<std::string> kKappaColumns = {"n", "lambda", "mu", "kappa_matrix", "kappa_conjecture", "kappa_recursive", "agree"};

Json row_json(const SweepRow& r, const std::optional<Rational>& at) {
  Json j{{"n", r.n},
         {"lambda", r.lambda.to_string()},
         {"mu", r.mu.to_string()},
         {"kappa_matrix", value_or_null(r.matrix, at)},
         {"kappa_conjecture", value_or_null(r.conjecture, at)},
         {"kappa_recursive", value_or_null(r.recursive, at)},
         {"agree", r.agree}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::vector<std::string> row_csv(const SweepRow& r, const std::optional<Rational>& at) {
  auto s = [&](const std::optional<RatFun>& x) { return x ? render(*x, at) : std::string(); };
  return {std::to_string(r.n), r.lambda.to_string(), r.mu.to_string(), s(r.matrix), s(r.conjecture), s(r.recursive),
          r.agree ? "true" : "false"};
}

std::string row_text(const SweepRow& r, const std::optional<Rational>& at) {
  auto s = [&](const std::optional<RatFun>& x) { return x ? render(*x, at) : std::string("-"); };
  std::string t = "(" + r.lambda.to_string() + ") " + r.mu.to_string() + ": matrix " + s(r.matrix) + " | conjecture " +
                  s(r.conjecture) + " | recursive " + s(r.recursive) + (r.agree ? "" : "  DISAGREE");
  if (!r.error.empty()) t += "  [" + r.error + "]";
  return t;
}

Output cmd_kappa(const Options& o) {
  SlWeight lambda = lambda_of(o);
  GlWeight mu = letter_of(o, o.mu, "--mu");
  auto at = at_of(o);
  const std::string& m = o.method;
  if (m != "all" && m != "matrix" && m != "conjecture" && m != "recursive") throw UsageError("unknown --method " + m);
  if (!is_dominant_sum(lambda, mu)) throw UsageError(lambda.to_string() + " + " + mu.to_string() + " is not dominant");
  SweepRow r;
  r.n = o.n;
  r.lambda = lambda;
  r.mu = mu;
  if (m == "all" || m == "matrix") r.matrix = default_engine().kappa_matrix(lambda, mu);
  if (m == "all" || m == "conjecture") r.conjecture = kappa_conjecture(lambda, mu);
  if ((m == "all" && o.n <= 4) || m == "recursive") r.recursive = default_engine().kappa_recursive(lambda, mu);
  std::vector<const RatFun*> vals;
  for (const auto* v : {&r.matrix, &r.conjecture, &r.recursive})
    if (*v) vals.push_back(&**v);
  r.agree = std::all_of(vals.begin(), vals.end(), [&](const RatFun* v) { return *v == *vals.front(); });
  Output out;
  out.json = row_json(r, at);
  out.csv_header = kKappaColumns;
  out.csv_rows = {row_csv(r, at)};
  out.text = {row_text(r, at)};
  out.status = r.agree ? 0 : 1;
  return out;
}

Output cmd_gamma(const Options& o) {
  SlWeight lambda = lambda_of(o);
  GlWeight mu = letter_of(o, o.mu, "--mu");
  GlWeight nu = letter_of(o, o.nu, "--nu");
  auto at = at_of(o);
  RatFun g = default_engine().gamma(lambda, mu, nu);
  ElementaryData d = elementary_data(mu);
  auto sigma = gamma_sigma(mu, d.x.back(), nu);
  Output out;
  out.json = {{"n", o.n},
              {"lambda", lambda.to_string()},
              {"mu", mu.to_string()},
              {"nu", nu.to_string()},
              {"sigma", sigma ? Json(sigma->to_string()) : Json(nullptr)},
              {"gamma", render(g, at)}};
  out.csv_header = {"n", "lambda", "mu", "nu", "sigma", "gamma"};
  out.csv_rows = {{std::to_string(o.n), lambda.to_string(), mu.to_string(), nu.to_string(), sigma ? sigma->to_string() : "",
                   render(g, at)}};
  out.text = {render(g, at)};
  return out;
}

Output cmd_conjecture(const Options& o) {
  require_n(o);
  if (o.level_bound < 0) throw UsageError("--level-bound must be nonnegative");
  auto at = at_of(o);
  auto rows = conjecture_sweep(o.n, o.level_bound, o.jobs, !o.no_matrix);
  Output out;
  Json list = Json::array();
  std::size_t agree = 0;
  out.csv_header = kKappaColumns;
  for (const auto& r : rows) {
    if (r.agree) ++agree;
    list.push_back(row_json(r, at));
    out.csv_rows.push_back(row_csv(r, at));
    out.text.push_back(row_text(r, at));
  }
  out.text.push_back(std::to_string(agree) + "/" + std::to_string(rows.size()) + " agree");
  out.json = {{"n", o.n}, {"level_bound", o.level_bound}, {"total", rows.size()}, {"agree", agree}, {"rows", list}};
  out.status = agree == rows.size() ? 0 : 1;
  return out;
}

Output cmd_dims(const Options& o) {
  std::vector<int> source = word_of(o, o.word, "--word");
  std::vector<int> target = word_of(o, o.target, "--target");
  HomRankResult h = hom_rank(o.n, source, target);
  Output out;
  out.json = {{"n", o.n},
              {"source", source},
              {"target", target},
              {"rank", h.rank},
              {"expected", h.expected},
              {"ranks_per_point", h.ranks_per_point},
              {"conclusive", h.conclusive}};
  out.csv_header = {"n", "source", "target", "rank", "expected", "conclusive"};
  out.csv_rows = {{std::to_string(o.n), int_list_to_string(source), int_list_to_string(target), std::to_string(h.rank),
                   std::to_string(h.expected), h.conclusive ? "true" : "false"}};
  out.text = {"rank " + std::to_string(h.rank) + ", path pairs " + std::to_string(h.expected) + (h.conclusive ? "" : "  MISMATCH")};
  out.status = h.conclusive ? 0 : 1;
  return out;
}

Output cmd_weyldim(const Options& o) {
  SlWeight lambda = lambda_of(o);
  auto at = at_of(o);
  RatFun dq = weyl_dim(lambda);
  Integer d = weyl_dim_at_one(lambda);
  Output out;
  out.json = {{"n", o.n}, {"lambda", lambda.to_string()}, {"dim", integer_to_string(d)}, {"dim_q", render(dq, at)}};
  out.csv_header = {"n", "lambda", "dim", "dim_q"};
  out.csv_rows = {{std::to_string(o.n), lambda.to_string(), integer_to_string(d), render(dq, at)}};
  out.text = {integer_to_string(d)};
  return out;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidWeight:
    case ErrorCode::NotDominant:
    case ErrorCode::LabelOutOfRange:
    case ErrorCode::ValidationError:
    case ErrorCode::UnsupportedRank:
    case ErrorCode::PathMismatch:
    case ErrorCode::WeightMismatch:
    case ErrorCode::NotAPermutation:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of sl_n ladder webs, clasps and local intersection forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", o.cache_dir, "Clasp cache directory (default $LADDERLAB_CACHE_DIR or .ladderlab-cache)");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  auto n_opt = [&](CLI::App* s) { s->add_option("--n", o.n, "Rank n of sl_n")->required(); };
  auto at_opt = [&](CLI::App* s) { s->add_option("--at", o.at, "Specialize at q=RATIONAL"); };
  std::map<std::string, std::function<Output(const Options&)>> handlers;

  auto* qnum = app.add_subcommand("qnum", "Quantum integer [k]");
  qnum->add_option("--k", o.k)->required();
  at_opt(qnum);
  handlers["qnum"] = cmd_qnum;

  auto* qb = app.add_subcommand("qbinom", "Quantum binomial [m choose k]");
  qb->add_option("--m", o.m)->required();
  qb->add_option("--k", o.k)->required();
  at_opt(qb);
  handlers["qbinom"] = cmd_qbinom;

  auto* paths = app.add_subcommand("paths", "Minuscule Littelmann paths of a word");
  n_opt(paths);
  paths->add_option("--word", o.word, "Comma-separated fundamental indices")->required();
  paths->add_option("--target", o.target, "Endpoint weight, comma-separated");
  paths->add_flag("--count", o.count, "Only print the number of paths");
  handlers["paths"] = cmd_paths;

  auto* ev = app.add_subcommand("eval", "Evaluate a ladder file as a matrix");
  ev->add_option("--ladder", o.ladder, "Ladder JSON file")->required();
  at_opt(ev);
  handlers["eval"] = cmd_eval;

  auto* rel = app.add_subcommand("relcheck", "Check the ladder relations over all label tuples");
  n_opt(rel);
  rel->add_option("--relation", o.relation, "Restrict to one relation");
  handlers["relcheck"] = cmd_relcheck;

  auto* cl = app.add_subcommand("clasp", "Clasp on the canonical sequence of lambda");
  n_opt(cl);
  cl->add_option("--lambda", o.lambda)->required();
  cl->add_flag("--check", o.check, "Verify idempotence, annihilation, normalization and trace");
  cl->add_flag("--oracle", o.oracle, "Compare with the independent linear solve");
  at_opt(cl);
  handlers["clasp"] = cmd_clasp;

  auto* ka = app.add_subcommand("kappa", "Local intersection form");
  n_opt(ka);
  ka->add_option("--lambda", o.lambda)->required();
  ka->add_option("--mu", o.mu)->required();
  ka->add_option("--method", o.method)->check(CLI::IsMember({"matrix", "conjecture", "recursive", "all"}));
  at_opt(ka);
  handlers["kappa"] = cmd_kappa;

  auto* ga = app.add_subcommand("gamma", "Coefficient gamma(lambda, mu, nu)");
  n_opt(ga);
  ga->add_option("--lambda", o.lambda)->required();
  ga->add_option("--mu", o.mu)->required();
  ga->add_option("--nu", o.nu)->required();
  at_opt(ga);
  handlers["gamma"] = cmd_gamma;

  auto* cj = app.add_subcommand("conjecture", "Compare kappa methods over all weights up to a level");
  n_opt(cj);
  cj->add_option("--level-bound", o.level_bound)->required();
  cj->add_flag("--no-matrix", o.no_matrix, "Skip the matrix computation");
  at_opt(cj);
  handlers["conjecture"] = cmd_conjecture;

  auto* di = app.add_subcommand("dims", "Rank of double ladders between two words against the path count");
  n_opt(di);
  di->add_option("--word", o.word)->required();
  di->add_option("--target", o.target)->required();
  handlers["dims"] = cmd_dims;

  auto* wd = app.add_subcommand("weyldim", "Weyl dimension of V_lambda");
  n_opt(wd);
  wd->add_option("--lambda", o.lambda)->required();
  at_opt(wd);
  handlers["weyldim"] = cmd_weyldim;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string dir = o.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("LADDERLAB_CACHE_DIR");
    dir = env && *env ? env : ".ladderlab-cache";
  }
  configure_default_engine(std::filesystem::path(dir));

  try {
    for (auto* sub : app.get_subcommands()) {
      Output out = handlers.at(sub->get_name())(o);
      emit(out, o.format);
      return out.status;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
