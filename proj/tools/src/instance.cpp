#include "grgraph_cli/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grgraph/constructions.hpp"
#include "grgraph/errors.hpp"

namespace grgraph::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) schema(path, "missing key \"" + key + "\"");
  return j.at(key);
}

std::size_t positive(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) schema(path, "expected a positive integer");
  return j.get<std::size_t>();
}

/// The single key of a one-key object, e.g. {"zn": 4}.
std::pair<std::string, const json*> tagged(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) schema(path, "expected an object with exactly one constructor key");
  return {j.begin().key(), &j.begin().value()};
}

Elem element(const FiniteRing& ring, const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= ring.size()) schema(path, "element index out of range");
    return static_cast<Elem>(v);
  }
  if (j.is_string()) {
    if (auto e = ring.find(j.get<std::string>())) return *e;
    schema(path, "no element named \"" + j.get<std::string>() + "\" in " + ring.description());
  }
  schema(path, "expected an element name or index");
}

std::vector<Elem> elements(const FiniteRing& ring, const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of elements");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(ring, j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteGroup parse_group(const json& j, const std::string& path) {
  auto [tag, body] = tagged(j, path);
  const std::string sub = path + "." + tag;
  if (tag == "cyclic") return FiniteGroup::cyclic(positive(*body, sub));
  if (tag == "dihedral") {
    const std::size_t n = positive(*body, sub);
    if (n < 3) schema(sub, "dihedral groups need n >= 3");
    return FiniteGroup::dihedral(n);
  }
  if (tag == "product") {
    if (!body->is_array() || body->empty()) schema(sub, "expected a nonempty array of groups");
    FiniteGroup g = parse_group((*body)[0], sub + "[0]");
    for (std::size_t i = 1; i < body->size(); ++i)
      g = FiniteGroup::product(g, parse_group((*body)[i], sub + "[" + std::to_string(i) + "]"));
    return g;
  }
  if (tag == "table") {
    try {
      return FiniteGroup::from_table(body->get<std::vector<std::vector<FiniteGroup::Index>>>());
    } catch (const json::exception&) {
      schema(sub, "expected a square array of group indices");
    }
  }
  throw Error(ErrorKind::UnknownConstructor, path + ": unknown group constructor \"" + tag + "\"");
}

GradeGroup parse_grade_group(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "integers") return GradeGroup::integers();
    throw Error(ErrorKind::UnknownConstructor, path + ": unknown group \"" + j.get<std::string>() + "\"");
  }
  return GradeGroup::finite(parse_group(j, path));
}

RingPtr parse_ring(const json& j, const std::string& path, std::size_t cap);

ModulePtr parse_module(const RingPtr& base, const json& j, const std::string& path, std::size_t cap) {
  if (j.is_string()) {
    if (j.get<std::string>() == "self") return FiniteModule::regular(base);
    throw Error(ErrorKind::UnknownConstructor, path + ": unknown module \"" + j.get<std::string>() + "\"");
  }
  auto [tag, body] = tagged(j, path);
  const std::string sub = path + "." + tag;
  if (tag == "quotient") return FiniteModule::quotient(base, elements(*base, *body, sub));
  if (tag == "sum") {
    if (!body->is_array() || body->empty()) schema(sub, "expected a nonempty array of modules");
    ModulePtr m = parse_module(base, (*body)[0], sub + "[0]", cap);
    for (std::size_t i = 1; i < body->size(); ++i)
      m = FiniteModule::direct_sum(m, parse_module(base, (*body)[i], sub + "[" + std::to_string(i) + "]", cap));
    return m;
  }
  throw Error(ErrorKind::UnknownConstructor, path + ": unknown module constructor \"" + tag + "\"");
}

RingPtr parse_algebra(const json& body, const std::string& path, std::size_t cap) {
  const std::size_t n = positive(field(body, "n", path), path + ".n");
  if (n < 2) schema(path + ".n", "expected n >= 2");
  std::vector<std::string> basis;
  if (body.contains("basis")) {
    if (!body.at("basis").is_array()) schema(path + ".basis", "expected an array of names");
    basis = body.at("basis").get<std::vector<std::string>>();
  }
  const json& table = field(body, "table", path);
  std::vector<std::vector<std::vector<long>>> structure;
  try {
    structure = table.get<std::vector<std::vector<std::vector<long>>>>();
  } catch (const json::exception&) {
    schema(path + ".table", "expected dim x dim x dim integer coefficients");
  }
  const std::size_t dim = structure.size();
  if (dim == 0) schema(path + ".table", "empty structure table");
  for (std::size_t i = 0; i < dim; ++i) {
    if (structure[i].size() != dim) schema(path + ".table[" + std::to_string(i) + "]", "expected a row of length dim");
    for (std::size_t k = 0; k < dim; ++k)
      if (structure[i][k].size() != dim)
        schema(path + ".table[" + std::to_string(i) + "][" + std::to_string(k) + "]", "expected dim coefficients");
  }
  if (!basis.empty() && basis.size() != dim) schema(path + ".basis", "expected one name per basis element");
  return algebra_over_zn(n, dim, structure, basis, cap);
}

RingPtr parse_ring(const json& j, const std::string& path, std::size_t cap) {
  auto [tag, body] = tagged(j, path);
  const std::string sub = path + "." + tag;
  if (tag == "zn") {
    const std::size_t n = positive(*body, sub);
    if (n < 2) schema(sub, "expected n >= 2");
    return make_cyclic_ring(n, cap);
  }
  if (tag == "product") {
    if (!body->is_array() || body->size() < 2) schema(sub, "expected an array of at least two rings");
    RingPtr r = parse_ring((*body)[0], sub + "[0]", cap);
    for (std::size_t i = 1; i < body->size(); ++i)
      r = direct_product(r, parse_ring((*body)[i], sub + "[" + std::to_string(i) + "]", cap), cap);
    return r;
  }
  if (tag == "poly_quotient") {
    RingPtr base = parse_ring(field(*body, "base", sub), sub + ".base", cap);
    return polynomial_quotient(base, elements(*base, field(*body, "modulus", sub), sub + ".modulus"), cap);
  }
  if (tag == "algebra") return parse_algebra(*body, sub, cap);
  if (tag == "group_ring") {
    RingPtr base = parse_ring(field(*body, "base", sub), sub + ".base", cap);
    return group_ring(base, parse_group(field(*body, "group", sub), sub + ".group"), cap);
  }
  if (tag == "idealization") {
    RingPtr base = parse_ring(field(*body, "base", sub), sub + ".base", cap);
    return idealization(base, parse_module(base, field(*body, "module", sub), sub + ".module", cap), cap);
  }
  throw Error(ErrorKind::UnknownConstructor, path + ": unknown ring constructor \"" + tag + "\"");
}

Degree parse_degree(const GradeGroup& group, const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const Degree d = j.get<Degree>();
    if (!group.contains(d)) schema(path, "degree not in " + group.description());
    return d;
  }
  if (j.is_string())
    if (auto d = group.parse_degree(j.get<std::string>())) return *d;
  schema(path, "expected a degree of " + group.description());
}

bool pure_power(const std::vector<Elem>& modulus, const FiniteRing& base) {
  for (std::size_t i = 0; i + 1 < modulus.size(); ++i)
    if (modulus[i] != base.zero()) return false;
  return true;
}

Grading parse_grading(const RingPtr& ring, const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "canonical")
      throw Error(ErrorKind::UnknownConstructor, path + ": unknown grading \"" + j.get<std::string>() + "\"");
    const Construction& c = ring->construction();
    switch (c.kind) {
      case ConstructionKind::group_ring:
        return group_ring_grading(ring);
      case ConstructionKind::idealization:
        return idealization_grading(ring);
      case ConstructionKind::poly_quotient:
        if (pure_power(c.modulus, *c.parts.front())) return poly_quotient_integer_grading(ring);
        break;
      default:
        break;
    }
    throw Error(ErrorKind::WrongConstruction,
                path + ": no canonical grading for " + ring->description() +
                    "; expected a group ring, an idealization or base[x]/(x^m)");
  }
  auto [tag, body] = tagged(j, path);
  const std::string sub = path + "." + tag;
  if (tag == "trivial") {
    if (body->is_object() && body->contains("group"))
      return trivial_grading(ring, parse_grade_group(body->at("group"), sub + ".group"));
    return trivial_grading(ring, parse_grade_group(*body, sub));
  }
  if (tag == "explicit") {
    const GradeGroup group = parse_grade_group(field(*body, "group", sub), sub + ".group");
    const json& components = field(*body, "components", sub);
    if (!components.is_array()) schema(sub + ".components", "expected an array");
    std::map<Degree, std::vector<Elem>> generators;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const std::string at = sub + ".components[" + std::to_string(i) + "]";
      const Degree d = parse_degree(group, field(components[i], "degree", at), at + ".degree");
      if (generators.count(d)) schema(at + ".degree", "degree listed twice");
      generators[d] = elements(*ring, field(components[i], "generators", at), at + ".generators");
    }
    return explicit_grading(ring, group, generators);
  }
  throw Error(ErrorKind::UnknownConstructor, path + ": unknown grading constructor \"" + tag + "\"");
}

Limits parse_limits(const json& j, const std::string& path) {
  Limits limits;
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string at = path + "." + key;
    if (key == "ring_size") limits.ring_size = positive(value, at);
    else if (key == "ideal_count") limits.ideal_count = positive(value, at);
    else if (key == "graph_order") limits.graph_order = positive(value, at);
    else schema(at, "unknown limit");
  }
  return limits;
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& fallback_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "ring" && key != "grading" && key != "limits") schema("$." + key, "unknown key");

  const Limits limits = doc.contains("limits") ? parse_limits(doc.at("limits"), "$.limits") : Limits{};
  RingPtr ring = parse_ring(field(doc, "ring", "$"), "$.ring", limits.ring_size);
  Grading grading = doc.contains("grading") ? parse_grading(ring, doc.at("grading"), "$.grading")
                                            : trivial_grading(ring, GradeGroup::finite(FiniteGroup::cyclic(1)));
  std::string name = fallback_name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) schema("$.name", "expected a string");
    name = doc.at("name").get<std::string>();
  }
  return Instance{std::move(name), std::move(grading), limits};
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str(), path.stem().string());
}

}  // namespace grgraph::cli
