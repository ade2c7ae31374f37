#include "ehrhart/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ehrhart/error.hpp"
#include "ehrhart/exactseq.hpp"
#include "ehrhart/series.hpp"
#include "ehrhart/theorem.hpp"

namespace ehrhart::cli {

namespace {

Int entry_from_json(const Json& v) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Int(v.get<unsigned long>()) : Int(v.get<long>());
  if (v.is_string()) return from_decimal(v.get<std::string>());
  if (v.is_number_float())
    throw Error(ErrorCode::InvalidInput, "vertex coordinates must be integers, got " + v.dump());
  throw Error(ErrorCode::InvalidInput, "unexpected vertex coordinate " + v.dump());
}

}  // namespace

Json int_json(const Int& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Json ints_json(std::span<const Int> values) {
  Json arr = Json::array();
  for (const Int& v : values) arr.push_back(int_json(v));
  return arr;
}

Json matrix_json(const IntMatrix& m) {
  Json arr = Json::array();
  for (const auto& row : m) arr.push_back(ints_json(row));
  return arr;
}

SimplexFile parse_simplex_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::InvalidInput, "expected an object with a \"vertices\" array");
  SimplexFile file;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::InvalidInput, "\"name\" must be a string");
    file.name = doc["name"].get<std::string>();
  }
  for (const Json& row : doc["vertices"]) {
    if (!row.is_array()) throw Error(ErrorCode::InvalidInput, "each vertex must be an array");
    IntVector v;
    for (const Json& x : row) v.push_back(entry_from_json(x));
    file.vertices.push_back(std::move(v));
  }
  return file;
}

SimplexFile read_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_simplex_json(buffer.str());
}

Json simplex_json(const SimplexFile& file) {
  Json j;
  if (file.name) j["name"] = *file.name;
  j["vertices"] = matrix_json(file.vertices);
  return j;
}

IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(from_decimal(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '(' || ch == ')')
      flush();
    else
      token += ch;
  }
  flush();
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty integer list");
  return out;
}

Json properties_json(std::span<const Int> delta) {
  using namespace exactseq;
  Json p;
  p["unimodal"] = is_unimodal(delta, false).holds;
  p["strictly_unimodal"] = is_unimodal(delta, true).holds;
  p["log_concave"] = is_log_concave(delta, false).holds;
  p["strictly_log_concave"] = is_log_concave(delta, true).holds;
  p["alternatingly_increasing"] = is_alternatingly_increasing(delta, false).holds;
  p["strictly_alternatingly_increasing"] = is_alternatingly_increasing(delta, true).holds;
  const bool nonneg = all_nonnegative(delta);
  p["stanley_13"] = nonneg && check_stanley(delta).holds;
  p["hibi_14"] = nonneg && check_hibi(delta).holds;
  return p;
}

Json delta_report(std::span<const Int> delta, const std::optional<Int>& normalized_volume) {
  const std::size_t d = delta.size() - 1;
  const std::size_t s = series::delta_degree(IntVector(delta.begin(), delta.end()));
  Json r;
  r["delta"] = ints_json(delta);
  r["d"] = d;
  r["s"] = s;
  r["normalized_volume"] = normalized_volume ? int_json(*normalized_volume) : Json(nullptr);
  r["properties"] = properties_json(delta);
  r["interior_m1"] = int_json(interior_count(DeltaVector{IntVector(delta.begin(), delta.end())}, Int(1)));
  const theorem::Bound b = theorem::thm_bound(s, d);
  r["bound"] = {{"lc", b.lc}, {"ai", b.ai}};
  return r;
}

}  // namespace ehrhart::cli
