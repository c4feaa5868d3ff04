#include "imhom/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace imh {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

Simplex simplex_from_names(const SimplicialComplex& k, const json& arr,
                           const std::string& context) {
  if (!arr.is_array())
    throw std::invalid_argument(context + ": simplex must be an array of vertex names");
  Simplex s;
  for (const json& v : arr) {
    int idx = k.vertex_index(v.get<std::string>());
    if (idx < 0)
      throw std::invalid_argument(context + ": undeclared vertex \"" +
                                  v.get<std::string>() + "\"");
    s.push_back(idx);
  }
  std::sort(s.begin(), s.end());
  return s;
}

json simplex_to_names(const SimplicialComplex& k, const Simplex& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(k.vertex_name(v));
  return arr;
}

}  // namespace

ComplexDocument parse_complex_document(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");

  ComplexDocument doc;
  doc.name = j.value("name", std::string());

  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("document needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const json& v : j["vertices"]) vertices.push_back(v.get<std::string>());

  if (!j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
    throw std::invalid_argument("document needs a \"maximal_simplices\" array");

  // two-pass: build a lookup complex first so names resolve uniformly
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!index.emplace(vertices[i], i).second)
      throw std::invalid_argument("duplicate vertex name \"" + vertices[i] + "\"");
  }
  std::vector<Simplex> maximal;
  for (const json& arr : j["maximal_simplices"]) {
    Simplex s;
    for (const json& v : arr) {
      auto it = index.find(v.get<std::string>());
      if (it == index.end())
        throw std::invalid_argument("maximal_simplices: undeclared vertex \"" +
                                    v.get<std::string>() + "\"");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    maximal.push_back(std::move(s));
  }
  auto k = std::make_shared<SimplicialComplex>(SimplicialComplex::build(vertices, maximal));

  if (j.contains("subcomplexes")) {
    if (!j["subcomplexes"].is_object())
      throw std::invalid_argument("\"subcomplexes\" must map names to simplex lists");
    for (const auto& [name, list] : j["subcomplexes"].items()) {
      std::set<Simplex> simplices;
      for (const json& arr : list)
        simplices.insert(simplex_from_names(*k, arr, "subcomplex \"" + name + "\""));
      // close under faces so hand-written documents can list generators only
      std::set<Simplex> closed;
      for (const Simplex& s : simplices) {
        int m = static_cast<int>(s.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
          Simplex face;
          for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) face.push_back(s[b]);
          closed.insert(std::move(face));
        }
      }
      k->add_subcomplex(name, std::move(closed));
    }
  }

  if (j.contains("stratification")) {
    if (!j["stratification"].is_array())
      throw std::invalid_argument("\"stratification\" must be an array");
    int prev_codim = 1;
    for (const json& entry : j["stratification"]) {
      int codim = entry.at("codim").get<int>();
      if (codim <= prev_codim)
        throw std::invalid_argument("stratification codims must be >= 2 and strictly increasing");
      prev_codim = codim;
      std::set<Simplex>& skel = doc.stratification[codim];
      for (const json& arr : entry.at("simplices"))
        skel.insert(simplex_from_names(*k, arr, "stratification"));
    }
  }

  if (j.contains("formal_dim")) doc.formal_dim = j["formal_dim"].get<int>();
  if (j.contains("components"))
    for (const json& c : j["components"]) {
      std::string cname = c.get<std::string>();
      if (!k->has_subcomplex(cname))
        throw std::invalid_argument("components: unknown subcomplex \"" + cname + "\"");
      doc.components.push_back(std::move(cname));
    }

  doc.complex = k;
  return doc;
}

namespace {

json complex_to_json(const std::string& name, const SimplicialComplex& k) {
  json j;
  j["name"] = name;
  json verts = json::array();
  for (const std::string& v : k.vertex_names()) verts.push_back(v);
  j["vertices"] = std::move(verts);
  json maximal = json::array();
  for (const Simplex& s : k.maximal_simplices()) maximal.push_back(simplex_to_names(k, s));
  j["maximal_simplices"] = std::move(maximal);
  if (!k.subcomplexes().empty()) {
    json subs = json::object();
    for (const auto& [sub_name, simplices] : k.subcomplexes()) {
      json list = json::array();
      for (const Simplex& s : simplices) list.push_back(simplex_to_names(k, s));
      subs[sub_name] = std::move(list);
    }
    j["subcomplexes"] = std::move(subs);
  }
  return j;
}

}  // namespace

std::string serialize_complex_document(const std::string& name, const SimplicialComplex& k) {
  return complex_to_json(name, k).dump(2);
}

std::string serialize_complex_document(const CorpusEntry& entry) {
  const SimplicialComplex& k = *entry.complex;
  json j;
  j["name"] = entry.name;
  json verts = json::array();
  for (const std::string& v : k.vertex_names()) verts.push_back(v);
  j["vertices"] = std::move(verts);
  json maximal = json::array();
  for (const Simplex& s : k.maximal_simplices()) maximal.push_back(simplex_to_names(k, s));
  j["maximal_simplices"] = std::move(maximal);
  if (!k.subcomplexes().empty()) {
    json subs = json::object();
    for (const auto& [name, simplices] : k.subcomplexes()) {
      json list = json::array();
      for (const Simplex& s : simplices) list.push_back(simplex_to_names(k, s));
      subs[name] = std::move(list);
    }
    j["subcomplexes"] = std::move(subs);
  }
  return j.dump(2);
}

MapDocument parse_map_document(const std::string& text, const ComplexResolver& resolve) {
  json j = parse_or_throw(text);
  if (!j.is_object()) throw std::invalid_argument("map document must be a JSON object");

  MapDocument doc;
  doc.label = j.value("label", std::string("unlabeled"));
  if (doc.label != "algebraic-model" && doc.label != "non-algebraic-model" &&
      doc.label != "unlabeled")
    throw std::invalid_argument("map label must be algebraic-model, non-algebraic-model, "
                                "or unlabeled");

  auto resolve_side = [&](const char* key, std::string& ref) -> ComplexPtr {
    const json& side = j.at(key);
    if (side.is_string()) {
      ref = side.get<std::string>();
      return resolve(ref);
    }
    if (side.is_object()) {
      ComplexDocument inner = parse_complex_document(side.dump());
      ref = inner.name;
      return inner.complex;
    }
    throw std::invalid_argument(std::string(key) +
                                " must be a reference string or an inline document");
  };
  doc.map.domain = resolve_side("domain", doc.domain);
  doc.map.codomain = resolve_side("codomain", doc.codomain);

  if (!j.contains("vertex_map") || !j["vertex_map"].is_object())
    throw std::invalid_argument("map document needs a \"vertex_map\" object");
  doc.map.vertex_map.assign(doc.map.domain->num_vertices(), -1);
  for (const auto& [from, to] : j["vertex_map"].items()) {
    int u = doc.map.domain->vertex_index(from);
    if (u < 0) throw std::invalid_argument("vertex_map: unknown domain vertex \"" + from + "\"");
    int v = doc.map.codomain->vertex_index(to.get<std::string>());
    if (v < 0)
      throw std::invalid_argument("vertex_map: unknown codomain vertex \"" +
                                  to.get<std::string>() + "\"");
    doc.map.vertex_map[u] = v;
  }
  for (int u = 0; u < doc.map.domain->num_vertices(); ++u)
    if (doc.map.vertex_map[u] < 0)
      throw std::invalid_argument("vertex_map: missing image for vertex \"" +
                                  doc.map.domain->vertex_name(u) + "\"");
  doc.map.validate();
  return doc;
}

std::string serialize_map_document(const std::string& name, const LabeledMap& m) {
  json j;
  j["name"] = name;
  j["label"] = m.label;
  j["domain"] = complex_to_json(name + ".domain", *m.map.domain);
  j["codomain"] = complex_to_json(name + ".codomain", *m.map.codomain);
  json vm = json::object();
  for (int u = 0; u < m.map.domain->num_vertices(); ++u)
    vm[m.map.domain->vertex_name(u)] = m.map.codomain->vertex_name(m.map.vertex_map[u]);
  j["vertex_map"] = std::move(vm);
  return j.dump(2);
}

}  // namespace imh
