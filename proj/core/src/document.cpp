#include "trigpatch/document.hpp"

#include <fstream>
#include <sstream>

#include "trigpatch/error.hpp"

namespace trigpatch {

using nlohmann::json;

namespace {

Error parse_error(const std::string& message, const std::string& where) {
  return validation_error("ParseError", message, {{"location", where}});
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'", where);
  return j.at(key);
}

long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw parse_error("expected an integer", where);
  return j.get<long>();
}

Rational rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw parse_error("expected a rational string", where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    throw parse_error("malformed rational '" + j.get<std::string>() + "'", where);
  }
}

LatticePoint point_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw parse_error("lifting key must read 'i,j'", key);
  try {
    return {std::stol(key.substr(0, comma)), std::stol(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw parse_error("lifting key must read 'i,j'", key);
  }
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

int sign_of(const json& j, const std::string& where) {
  if (j == "+") return 1;
  if (j == "-") return -1;
  throw parse_error("expected '+' or '-'", where);
}

json local_json(const LocalEvent& e) { return {{"kind", to_string(e.kind)}, {"order", e.order}}; }

}  // namespace

Lifting lifting_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("lifting must be an object", "lifting");
  Lifting out;
  for (const auto& [key, value] : j.items()) out.emplace(point_key(key), rational(value, "lifting." + key));
  return out;
}

json to_json(const Lifting& lambda) {
  json j = json::object();
  for (const auto& [q, v] : lambda) j[std::to_string(q.x) + "," + std::to_string(q.y)] = v.str();
  return j;
}

PatchworkDocument document_from_json(const json& j) {
  PatchworkDocument d;
  if (!j.is_object()) throw parse_error("document must be an object", "$");
  if (j.contains("name")) d.name = j.at("name").get<std::string>();
  if (j.contains("tags")) d.tags = j.at("tags").get<std::vector<std::string>>();
  const long n = integer(field(j, "degree", "$"), "degree");
  if (n < 1) throw validation_error("ValidationError", "degree must be positive", {{"degree", std::to_string(n)}});
  const json& cells = field(j, "cells", "$");
  if (!cells.is_array()) throw parse_error("cells must be an array", "cells");
  std::vector<PatchCell> built;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string at = "cells[" + std::to_string(k) + "]";
    std::vector<LatticePoint> vertices;
    for (const auto& v : field(cells[k], "vertices", at)) {
      if (!v.is_array() || v.size() != 2) throw parse_error("vertex must be [x, y]", at + ".vertices");
      vertices.push_back({integer(v[0], at), integer(v[1], at)});
    }
    const auto polygon = LatticePolygon::from_vertices(vertices);
    if (!polygon) throw validation_error("DegeneratePolygon", "cell vertices do not form a convex polygon", {{"cell", std::to_string(k)}});
    std::vector<std::pair<LatticePoint, Rational>> terms;
    for (const auto& c : field(cells[k], "coefficients", at)) {
      const std::string where = at + ".coefficients";
      const LatticePoint q{integer(field(c, "i", where), where), integer(field(c, "j", where), where)};
      if (!polygon->contains(q))
        throw validation_error("MonomialOutsideCell", "monomial lies outside its cell", {{"cell", std::to_string(k)}, {"monomial", q.str()}});
      const Rational v = rational(field(c, "value", where), where);
      if (!v.is_zero()) terms.emplace_back(q, v);
    }
    built.push_back({*polygon, curve_from_points(terms)});
  }
  d.patchwork = Patchwork::build(n, std::move(built));
  if (j.contains("lifting")) d.lifting = lifting_from_json(j.at("lifting"));
  if (j.contains("expected")) d.expected = SignArray::parse(j.at("expected").get<std::string>());
  return d;
}

PatchworkDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what(), "byte " + std::to_string(e.byte));
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw parse_error(e.what(), "$");
  }
}

PatchworkDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("ParseError", "cannot open file", {{"path", path}});
  std::stringstream buf;
  buf << in.rdbuf();
  PatchworkDocument d = parse_document(buf.str());
  if (d.name.empty()) d.name = path;
  return d;
}

json to_json(const Patchwork& p) {
  json cells = json::array();
  for (const auto& c : p.cells()) {
    json vertices = json::array(), coefficients = json::array();
    for (const auto& v : c.polygon.vertices()) vertices.push_back({v.x, v.y});
    for (const auto& [i, j] : c.curve.support())
      coefficients.push_back({{"i", i}, {"j", j}, {"value", c.curve.coefficient(i, j).str()}});
    cells.push_back({{"vertices", vertices}, {"coefficients", coefficients}});
  }
  return {{"degree", p.degree()}, {"cells", cells}};
}

json to_json(const PatchworkDocument& d) {
  json j = to_json(d.patchwork);
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.tags.empty()) j["tags"] = d.tags;
  if (d.lifting) j["lifting"] = to_json(*d.lifting);
  if (d.expected) j["expected"] = d.expected->str();
  return j;
}

json to_json(const GraphSkeleton& g) {
  json events = json::array(), arcs = json::array();
  for (const auto& e : g.events) {
    json je = {{"kind", to_string(e.kind)}};
    if (e.is_mark()) {
      if (e.at_mark) je["at"] = local_json(*e.at_mark);
    } else {
      je["order"] = e.order;
    }
    events.push_back(je);
  }
  for (const auto& a : g.arcs) {
    json ja = {{"interval", to_string(a.interval)}};
    if (a.signs) {
      ja["d"] = sign_char(a.signs->d);
      ja["q"] = sign_char(a.signs->q);
    }
    arcs.push_back(ja);
  }
  return {{"events", events},
          {"arcs", arcs},
          {"interior", {{"zero", g.interior_zero}, {"pole", g.interior_pole}, {"one", g.interior_one}}}};
}

GraphSkeleton skeleton_from_json(const json& j) {
  GraphSkeleton g;
  try {
    for (const auto& je : field(j, "events", "$")) {
      BoundaryEvent e;
      e.kind = event_kind_from_string(field(je, "kind", "events").get<std::string>());
      if (e.is_mark()) {
        if (je.contains("at"))
          e.at_mark = LocalEvent{event_kind_from_string(je.at("at").at("kind").get<std::string>()),
                                 static_cast<int>(integer(je.at("at").at("order"), "events.at"))};
      } else {
        e.order = static_cast<int>(integer(field(je, "order", "events"), "events.order"));
      }
      g.events.push_back(e);
    }
    for (const auto& ja : field(j, "arcs", "$")) {
      BoundaryArc a;
      a.interval = interval_from_string(field(ja, "interval", "arcs").get<std::string>());
      if (ja.contains("d")) a.signs = SignPair{sign_of(ja.at("d"), "arcs.d"), sign_of(ja.at("q"), "arcs.q")};
      g.arcs.push_back(a);
    }
    if (j.contains("interior")) {
      const json& in = j.at("interior");
      g.interior_zero = integer(field(in, "zero", "interior"), "interior.zero");
      g.interior_pole = integer(field(in, "pole", "interior"), "interior.pole");
      g.interior_one = integer(field(in, "one", "interior"), "interior.one");
    }
  } catch (const json::exception& e) {
    throw parse_error(e.what(), "skeleton");
  }
  return g;
}

json to_json(const ScanOrder& order) {
  json groups = json::array();
  for (const auto& g : order.groups)
    groups.push_back({{"cells", g.cells}, {"vertex", {g.distinguished_vertex.x, g.distinguished_vertex.y}}});
  return {{"groups", groups}, {"discarded", order.discarded}, {"ties", order.ties}};
}

json to_json(const CheckReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"subject", f.subject}, {"detail", f.detail}});
  return {{"ok", report.ok()}, {"failures", failures}};
}

json to_json(const SkeletonReport& report) { return {{"ok", report.ok()}, {"violations", report.violations}}; }

json to_json(const AssemblyResult& r) {
  json log = json::array();
  for (const auto& e : r.log) log.push_back({{"group", e.group}, {"action", e.action}, {"detail", e.detail}});
  return {{"order", to_json(r.order)},
          {"skeleton", to_json(r.skeleton)},
          {"sign_array", r.extracted.str()},
          {"combinatorial_sign_array", r.combinatorial.str()},
          {"degree", r.skeleton.total_order(EventKind::OnePre) + 2 * r.skeleton.interior_one},
          {"surgery_log", log},
          {"checks", to_json(r.report)}};
}

}  // namespace trigpatch
