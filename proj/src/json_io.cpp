#include "wco/json_io.hpp"

#include <fstream>

namespace wco {

namespace {

const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(what) + " is missing the key '" + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("a complex value must be a [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

MeasureSpace space_from_json(const json& j) {
  if (!j.is_object()) throw InputError("space must be an object");
  const json& arr = need(j, "atoms", "space");
  if (!arr.is_array()) throw InputError("space atoms must be an array");
  std::vector<Atom> atoms;
  for (const json& a : arr) {
    if (!a.is_object()) throw InputError("each atom must be an object");
    const json& id = need(a, "id", "atom");
    if (!id.is_string()) throw InputError("atom id must be a string");
    atoms.push_back(
        {id.get<std::string>(), number(need(a, "mass", "atom"), "atom mass")});
  }
  return MeasureSpace(std::move(atoms));
}

json space_to_json(const MeasureSpace& s) {
  json arr = json::array();
  for (const Atom& a : s.atoms())
    arr.push_back({{"id", a.id}, {"mass", a.mass}});
  return {{"atoms", std::move(arr)}};
}

WcoSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InputError("system must be an object");
  MeasureSpace space = space_from_json(need(j, "space", "system"));
  const json& jphi = need(j, "phi", "system");
  if (!jphi.is_object()) throw InputError("phi must be an object");
  std::vector<std::size_t> phi(space.size());
  std::vector<char> covered(space.size(), 0);
  for (const auto& [from, to] : jphi.items()) {
    std::size_t i = space.index_of(from);
    if (!to.is_string()) throw InputError("phi values must be atom ids");
    phi[i] = space.index_of(to.get<std::string>());
    covered[i] = 1;
  }
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!covered[i])
      throw InputError("phi is undefined at atom '" + space.id(i) + "'");
  Field w(space.size(), 0.0);  // atoms absent from w carry weight zero
  if (auto it = j.find("w"); it != j.end()) {
    if (!it->is_object()) throw InputError("w must be an object");
    for (const auto& [id, val] : it->items())
      w[space.index_of(id)] = complex_from_json(val);
  }
  return WcoSystem(std::move(space), std::move(phi), std::move(w));
}

json system_to_json(const WcoSystem& sys) {
  json jphi = json::object(), jw = json::object();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    jphi[sys.space().id(i)] = sys.space().id(sys.phi(i));
    jw[sys.space().id(i)] = complex_to_json(sys.w(i));
  }
  return {{"space", space_to_json(sys.space())},
          {"phi", std::move(jphi)},
          {"w", std::move(jw)}};
}

TreeShift tree_from_json(const json& j) {
  if (!j.is_object()) throw InputError("tree must be an object");
  const json& jv = need(j, "vertices", "tree");
  if (!jv.is_array()) throw InputError("tree vertices must be an array");
  std::vector<std::string> ids;
  for (const json& v : jv) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    ids.push_back(v.get<std::string>());
  }
  std::map<std::string, std::string> parent;
  const json& jp = need(j, "parent", "tree");
  if (!jp.is_object()) throw InputError("tree parent must be an object");
  for (const auto& [child, par] : jp.items()) {
    if (!par.is_string()) throw InputError("parent values must be vertex ids");
    parent[child] = par.get<std::string>();
  }
  std::optional<std::string> root;
  if (auto it = j.find("root"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("root must be a vertex id or null");
    root = it->get<std::string>();
  }
  std::vector<char> trunc;
  if (auto it = j.find("truncated"); it != j.end()) {
    if (!it->is_array()) throw InputError("truncated must be an array of ids");
    trunc.assign(ids.size(), 0);
    DirectedTree probe(ids, parent, root);  // to resolve ids
    for (const json& v : *it) {
      if (!v.is_string()) throw InputError("truncated entries must be ids");
      trunc[probe.index_of(v.get<std::string>())] = 1;
    }
  }
  DirectedTree tree(ids, parent, root, std::move(trunc));
  Field lambda(tree.size(), 0.0);
  if (auto it = j.find("lambda"); it != j.end()) {
    if (!it->is_object()) throw InputError("lambda must be an object");
    for (const auto& [id, val] : it->items())
      lambda[tree.index_of(id)] = complex_from_json(val);
  } else {
    for (std::size_t v = 0; v < tree.size(); ++v) lambda[v] = 1.0;
  }
  return TreeShift(std::move(tree), std::move(lambda));
}

json tree_to_json(const TreeShift& shift) {
  const DirectedTree& t = shift.tree();
  json jv = json::array(), jp = json::object(), jl = json::object(),
       jt = json::array();
  for (std::size_t v = 0; v < t.size(); ++v) {
    jv.push_back(t.id(v));
    if (auto p = t.parent(v)) jp[t.id(v)] = t.id(*p);
    jl[t.id(v)] = complex_to_json(shift.lambda(v));
    if (t.truncated(v)) jt.push_back(t.id(v));
  }
  json out = {{"vertices", std::move(jv)},
              {"parent", std::move(jp)},
              {"lambda", std::move(jl)},
              {"truncated", std::move(jt)}};
  out["root"] = t.root() ? json(t.id(*t.root())) : json(nullptr);
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

WcoSystem load_system(const std::string& path) {
  return system_from_json(load_json(path));
}

TreeShift load_tree(const std::string& path) {
  return tree_from_json(load_json(path));
}

json field_to_json(const MeasureSpace& s, const Field& f) {
  json out = json::object();
  for (std::size_t i = 0; i < s.size(); ++i)
    out[s.id(i)] = complex_to_json(f[i]);
  return out;
}

json density_to_json(const MeasureSpace& s, const Density& f) {
  json out = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) out[s.id(i)] = f[i];
  return out;
}

json report_to_json(const PropertyReport& r) {
  return {{"property", std::string(property_name(r.property))},
          {"verdict", r.verdict},
          {"applicable", r.applicable},
          {"tolerance", r.tolerance},
          {"witness", r.witness},
          {"witness_atoms", r.witness_atoms},
          {"witness_values", r.witness_values}};
}

json subspace_to_json(const MeasureSpace& s, const SubspaceDescriptor& sub) {
  json atoms = json::array();
  for (std::size_t i : sub.atoms) atoms.push_back(s.id(i));
  json out = {{"kind", std::string(subspace_kind_name(sub.kind))},
              {"atoms", std::move(atoms)}};
  out["threshold"] = sub.threshold ? json(*sub.threshold) : json(nullptr);
  return out;
}

}  // namespace wco
