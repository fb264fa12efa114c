#include "nilrigid/algebra_json.hpp"

namespace nilrigid {

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(std::span<const Rat> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const QMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(where + ": expected a rational string such as \"3/2\"");
}

QVec vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected an array");
  QVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

QMat mat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected an array of rows");
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Rat> data;
  for (auto& r : rows) {
    if (r.size() != cols) throw Error(where + ": rows have different lengths");
    data.insert(data.end(), r.begin(), r.end());
  }
  return QMat(rows.size(), cols, std::move(data));
}

Json algebra_to_json(const Graded2Step& a, const Metric* metric) {
  Json doc;
  Json br = Json::array();
  for (const auto& b : a.brackets()) {
    Json e;
    e["i"] = b.i + 1;
    e["j"] = b.j + 1;
    e["z"] = to_json(b.z);
    br.push_back(std::move(e));
  }
  doc["brackets"] = std::move(br);
  doc["m"] = a.m();
  if (metric) doc["metric"] = Json{{"V", to_json(metric->V)}, {"Z", to_json(metric->Z)}};
  doc["n"] = a.n();
  return doc;
}

namespace {

std::size_t count_field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw Error(std::string("missing field \"") + name + "\"");
  const Json& v = doc[name];
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw Error(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

ParsedAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error("algebra document must be a JSON object");
  std::size_t n = count_field(doc, "n");
  std::size_t m = count_field(doc, "m");
  if (n > kMaxVars) throw Error("field \"n\" exceeds the supported maximum of 32");
  if (!doc.contains("brackets")) throw Error("missing field \"brackets\"");
  const Json& br = doc["brackets"];
  if (!br.is_array()) throw Error("field \"brackets\" must be an array");
  std::vector<Graded2Step::Bracket> list;
  for (std::size_t t = 0; t < br.size(); ++t) {
    std::string where = "brackets[" + std::to_string(t) + "]";
    const Json& e = br[t];
    if (!e.is_object()) throw Error(where + " must be an object");
    for (const char* f : {"i", "j", "z"})
      if (!e.contains(f)) throw Error(where + ": missing field \"" + f + "\"");
    if (!e["i"].is_number_integer() || !e["j"].is_number_integer())
      throw Error(where + ": \"i\" and \"j\" must be integers");
    long long i = e["i"].get<long long>(), j = e["j"].get<long long>();
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
      throw Error(where + ": index out of range 1.." + std::to_string(n));
    QVec z = vec_from_json(e["z"], where + ".z");
    if (z.size() != m) throw Error(where + ".z: expected " + std::to_string(m) + " entries");
    list.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), std::move(z)});
  }
  ParsedAlgebra out{Graded2Step::from_brackets(n, m, list), std::nullopt};
  if (doc.contains("metric") && !doc["metric"].is_null()) {
    const Json& g = doc["metric"];
    if (!g.is_object()) throw Error("field \"metric\" must be an object");
    for (const char* f : {"V", "Z"})
      if (!g.contains(f)) throw Error(std::string("metric: missing field \"") + f + "\"");
    Metric met{mat_from_json(g["V"], "metric.V"), mat_from_json(g["Z"], "metric.Z")};
    if (met.V.rows() != n || met.V.cols() != n) throw Error("metric.V must be n x n");
    if (met.Z.rows() != m || met.Z.cols() != m) throw Error("metric.Z must be m x m");
    out.metric = std::move(met);
  }
  return out;
}

}  // namespace nilrigid
