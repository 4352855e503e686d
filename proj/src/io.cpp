#include "ladderlab/io.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace ladderlab {

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, where + ": bad integer string");
    return z;
  }
  throw Error(ErrorCode::ParseError, where + ": expected an integer");
}

int int_field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, where + ": missing field \"" + key + "\"");
  if (!it->is_number_integer()) throw Error(ErrorCode::ParseError, where + "." + key + ": expected an integer");
  return it->get<int>();
}

std::vector<std::pair<int, int>> pair_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected a list of [index, label] pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError, at + ": expected [index, label]");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& v) {
  Json a = Json::array();
  for (auto [i, l] : v) a.push_back(Json::array({i, l}));
  return a;
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, integer_to_json(c)}));
  return a;
}

LaurentPoly laurent_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected a list of [exponent, coefficient]");
  std::vector<std::pair<int, Integer>> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& t = j[i];
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error(ErrorCode::ParseError, at + ": expected [exponent, coefficient]");
    terms.emplace_back(t[0].get<int>(), integer_from_json(t[1], at));
  }
  return LaurentPoly::from_terms(terms);
}

Json ratfun_to_json(const RatFun& x) {
  return Json{{"num", laurent_to_json(x.num())}, {"den", laurent_to_json(x.den())}};
}

RatFun ratfun_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorCode::ParseError, where + ": expected {\"num\", \"den\"}");
  return RatFun::make(laurent_from_json(j["num"], where + ".num"), laurent_from_json(j["den"], where + ".den"));
}

Json ladder_to_json(const Ladder& L) {
  Json rungs = Json::array();
  for (const auto& s : L.steps) {
    if (const auto* r = std::get_if<Rung>(&s)) {
      rungs.push_back(Json{{"pos", r->pos}, {"tilt", tilt_name(r->tilt)}, {"s", r->s}});
    } else if (const auto* st = std::get_if<Strip>(&s)) {
      rungs.push_back(Json{{"strip", pairs_to_json(st->removed)}});
    } else {
      rungs.push_back(Json{{"insert", pairs_to_json(std::get<Insert>(s).added)}});
    }
  }
  return Json{{"n", L.n}, {"bottom", L.bottom}, {"rungs", rungs}};
}

Ladder ladder_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "ladder: expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "bottom" && key != "rungs") throw Error(ErrorCode::ParseError, "ladder: unknown field \"" + key + "\"");
  Ladder L;
  L.n = int_field(j, "n", "ladder");
  if (L.n < 2) throw Error(ErrorCode::ValidationError, "ladder.n: rank must be at least 2");
  if (!j.contains("bottom") || !j["bottom"].is_array()) throw Error(ErrorCode::ParseError, "ladder.bottom: expected a list of labels");
  for (std::size_t i = 0; i < j["bottom"].size(); ++i) {
    const Json& v = j["bottom"][i];
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "ladder.bottom[" + std::to_string(i) + "]: expected an integer");
    L.bottom.push_back(v.get<int>());
  }
  for (std::size_t i = 0; i < L.bottom.size(); ++i)
    if (L.bottom[i] < 0 || L.bottom[i] > L.n)
      throw Error(ErrorCode::ValidationError, "ladder.bottom[" + std::to_string(i) + "]: label outside [0," + std::to_string(L.n) + "]");
  Json rungs = j.value("rungs", Json::array());
  if (!rungs.is_array()) throw Error(ErrorCode::ParseError, "ladder.rungs: expected a list");
  std::vector<int> cur = L.bottom;
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    const Json& r = rungs[i];
    std::string at = "ladder.rungs[" + std::to_string(i) + "]";
    if (!r.is_object()) throw Error(ErrorCode::ParseError, at + ": expected an object");
    Step step;
    if (r.contains("strip")) {
      if (r.size() != 1) throw Error(ErrorCode::ParseError, at + ": strip takes no other fields");
      step = Strip{pair_list(r["strip"], at + ".strip")};
    } else if (r.contains("insert")) {
      if (r.size() != 1) throw Error(ErrorCode::ParseError, at + ": insert takes no other fields");
      step = Insert{pair_list(r["insert"], at + ".insert")};
    } else {
      for (const auto& [key, value] : r.items())
        if (key != "pos" && key != "tilt" && key != "s") throw Error(ErrorCode::ParseError, at + ": unknown field \"" + key + "\"");
      Rung g;
      g.pos = int_field(r, "pos", at);
      g.s = int_field(r, "s", at);
      if (!r.contains("tilt") || !r["tilt"].is_string()) throw Error(ErrorCode::ParseError, at + ".tilt: expected \"NE\" or \"NW\"");
      std::string t = r["tilt"].get<std::string>();
      if (t == "NE") g.tilt = Tilt::NE;
      else if (t == "NW") g.tilt = Tilt::NW;
      else throw Error(ErrorCode::ParseError, at + ".tilt: expected \"NE\" or \"NW\", got \"" + t + "\"");
      step = g;
    }
    Ladder one = Ladder::identity(L.n, cur);
    one.then(step);
    try {
      cur = one.top();
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, at + ": " + e.what());
    }
    L.steps.push_back(step);
  }
  try {
    L.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("ladder: ") + e.what());
  }
  return L;
}

Ladder parse_ladder(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("ladder file: ") + e.what());
  }
  return ladder_from_json(j);
}

Ladder load_ladder(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ladder(ss.str());
}

std::string dump_ladder(const Ladder& L) { return ladder_to_json(L).dump(2) + "\n"; }

Json matrix_to_json(const EvalMatrix& M) {
  Json entries = Json::array();
  for (const auto& [i, j, x] : M.triplets()) entries.push_back(Json::array({i, j, ratfun_to_json(x)}));
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

Json matrix_to_json(const LaurentMatrix& M) {
  Json entries = Json::array();
  for (const auto& [i, j, x] : M.triplets()) entries.push_back(Json::array({i, j, laurent_to_json(x)}));
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

EvalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "matrix: expected an object");
  auto rows = static_cast<Index>(int_field(j, "rows", "matrix"));
  auto cols = static_cast<Index>(int_field(j, "cols", "matrix"));
  if (!j.contains("entries") || !j["entries"].is_array()) throw Error(ErrorCode::ParseError, "matrix.entries: expected a list");
  std::vector<SparseVec<RatFun>> columns(cols);
  const Json& entries = j["entries"];
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Json& e = entries[k];
    std::string at = "matrix.entries[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError, at + ": expected [row, col, value]");
    auto r = e[0].get<Index>(), c = e[1].get<Index>();
    if (r >= rows || c >= cols) throw Error(ErrorCode::ValidationError, at + ": index out of range");
    columns[c].emplace_back(r, ratfun_from_json(e[2], at));
  }
  EvalMatrix M(rows, cols);
  for (Index c = 0; c < cols; ++c) M.set_column(c, canonicalize(std::move(columns[c])));
  return M;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  static std::atomic<unsigned long> counter{0};
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::ostringstream name;
  name << path.filename().string() << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << counter++;
  std::filesystem::path tmp = dir / name.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(ErrorCode::InvalidInput, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ladderlab
