#include "binuc/io.hpp"

#include <algorithm>

namespace binuc {

using nlohmann::json;

json lattice_to_json(const FinPoset& p) {
  json j;
  j["name"] = p.name();
  json elems = json::array();
  for (int i = 0; i < p.size(); ++i) elems.push_back(p.label(i));
  j["elements"] = std::move(elems);
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back(json::array({p.label(lo), p.label(hi)}));
  j["covers"] = std::move(covers);
  return j;
}

FinLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(Errc::schema_error, "lattice JSON needs 'elements' and 'covers'");
  std::string name = j.value("name", std::string("lattice"));
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) fail(Errc::schema_error, "'elements' must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(Errc::schema_error, "'covers' must be [lower, upper] label pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FinLattice::from_covers(std::move(name), labels, covers);
}

json binuc_poset_to_json(const BinucPoset& bp) { return lattice_to_json(bp.order); }

json algebra_to_json(const AlgebraSpec& a) {
  json j;
  j["name"] = a.name;
  j["rank"] = a.rank;
  json indecs = json::array();
  for (const auto& x : a.indec) {
    json e;
    e["id"] = x.id;
    e["dim"] = x.dim;
    e["projective"] = x.projective;
    e["end_dim"] = x.end_dim;
    e["g"] = x.g;
    json q = json::array();
    for (int i : x.quotients.members()) q.push_back(a.indec[i].id);
    e["quotients"] = std::move(q);
    e["tau"] = x.tau ? json(a.indec[*x.tau].id) : json(nullptr);
    indecs.push_back(std::move(e));
  }
  j["indecomposables"] = std::move(indecs);
  json hom = json::array();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.hom.get(x, y)) hom.push_back(json::array({a.indec[x].id, a.indec[y].id}));
  j["hom"] = std::move(hom);
  json ses = json::array();
  for (const auto& s : a.ses) {
    json e;
    auto ids = [&](const std::vector<int>& part) {
      json arr = json::array();
      for (int i : part) arr.push_back(a.indec[i].id);
      return arr;
    };
    e["sub"] = ids(s.sub);
    e["mid"] = ids(s.mid);
    e["quot"] = ids(s.quot);
    ses.push_back(std::move(e));
  }
  j["ses"] = std::move(ses);
  return j;
}

AlgebraSpec algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("indecomposables"))
    fail(Errc::schema_error, "algebra JSON needs 'rank' and 'indecomposables'");
  AlgebraSpec a;
  a.name = j.value("name", std::string("algebra"));
  if (!j.at("rank").is_number_integer()) fail(Errc::schema_error, "'rank' must be an integer");
  a.rank = j.at("rank").get<int>();

  const auto& indecs = j.at("indecomposables");
  if (!indecs.is_array() || indecs.empty())
    fail(Errc::schema_error, "'indecomposables' must be a nonempty array");
  if (indecs.size() > 64) fail(Errc::too_large, "more than 64 indecomposables");

  // first pass: ids
  std::vector<std::string> ids;
  for (const auto& e : indecs) {
    if (!e.is_object() || !e.contains("id") || !e.at("id").is_string())
      fail(Errc::schema_error, "each indecomposable needs a string 'id'");
    ids.push_back(e.at("id").get<std::string>());
  }
  auto id_index = [&](const std::string& id) -> int {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) fail(Errc::schema_error, "unknown module id '" + id + "'");
    return int(it - ids.begin());
  };

  a.indec.resize(ids.size());
  for (size_t k = 0; k < ids.size(); ++k) {
    const auto& e = indecs[k];
    Indec& x = a.indec[k];
    x.id = ids[k];
    for (const char* field : {"dim", "g", "quotients"})
      if (!e.contains(field) || !e.at(field).is_array())
        fail(Errc::schema_error, "'" + x.id + "' needs array field '" + field + "'");
    x.dim = e.at("dim").get<std::vector<int>>();
    x.g = e.at("g").get<std::vector<int>>();
    x.projective = e.value("projective", false);
    x.end_dim = e.value("end_dim", 1);
    for (const auto& q : e.at("quotients")) x.quotients.add(id_index(q.get<std::string>()));
    if (e.contains("tau") && !e.at("tau").is_null())
      x.tau = id_index(e.at("tau").get<std::string>());
  }

  a.hom = BitMatrix(int(ids.size()));
  if (j.contains("hom")) {
    for (const auto& p : j.at("hom")) {
      if (!p.is_array() || p.size() != 2)
        fail(Errc::schema_error, "'hom' entries must be [source, target] pairs");
      a.hom.set(id_index(p[0].get<std::string>()), id_index(p[1].get<std::string>()));
    }
  }
  if (j.contains("ses")) {
    for (const auto& s : j.at("ses")) {
      if (!s.is_object() || !s.contains("sub") || !s.contains("mid") || !s.contains("quot"))
        fail(Errc::schema_error, "'ses' entries need sub/mid/quot arrays");
      Ses q;
      for (const auto& v : s.at("sub")) q.sub.push_back(id_index(v.get<std::string>()));
      for (const auto& v : s.at("mid")) q.mid.push_back(id_index(v.get<std::string>()));
      for (const auto& v : s.at("quot")) q.quot.push_back(id_index(v.get<std::string>()));
      a.ses.push_back(std::move(q));
    }
  }
  a.validate();
  return a;
}

json tors_to_json(const TorsData& t) {
  json j = lattice_to_json(t.lattice.poset());
  json classes;
  for (int e = 0; e < t.lattice.size(); ++e) {
    json ids = json::array();
    for (int i : t.class_of[e].members()) ids.push_back(t.spec.indec[i].id);
    classes[t.lattice.label(e)] = std::move(ids);
  }
  j["classes"] = std::move(classes);
  return j;
}

bool looks_like_algebra(const json& j) {
  return j.is_object() && j.contains("indecomposables") && j.contains("rank");
}

}  // namespace binuc
