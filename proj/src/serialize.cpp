#include "inscriber/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace inscriber {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Scalar scalar_of(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad("scalars are \"p/q\" strings or integers");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json face_json(const Face& f) { return Json(f); }

Face face_of(const Json& j) {
  if (!j.is_array()) bad("faces are arrays of vertex indices");
  Face f;
  for (const auto& v : j) f.push_back(int_of(v, "vertex index"));
  return f;
}

std::vector<Point> points_of(const Json& j) {
  if (!j.is_array()) bad("expected an array of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

std::vector<Face> faces_of(const Json& j) {
  if (!j.is_array()) bad("expected an array of faces");
  std::vector<Face> out;
  for (const auto& f : j) out.push_back(face_of(f));
  return out;
}

Json sphere_json(const Sphere& s) { return {{"center", to_json(s.center)}, {"radius_sq", to_string(s.radius_sq)}}; }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& s : p) a.push_back(to_string(s));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) bad("points are arrays of scalars");
  Point p;
  for (const auto& s : j) p.push_back(scalar_of(s));
  return p;
}

Json to_json(const Triangulation& t) {
  Json verts = Json::array();
  for (const auto& v : t.vertices()) verts.push_back(to_json(v));
  Json facets = Json::array();
  for (const auto& f : t.facets()) facets.push_back(face_json(f));
  return {{"dim", t.dim()}, {"vertices", verts}, {"facets", facets}};
}

Triangulation triangulation_from_json(const Json& j) {
  const int dim = int_of(field(j, "dim"), "dim");
  return build_triangulation(dim, points_of(field(j, "vertices")), faces_of(field(j, "facets")));
}

Json to_json(const DualTree& t) {
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
  return {{"nodes", t.node_count()}, {"edges", edges}};
}

DualTree tree_from_json(const Json& j) {
  const int nodes = int_of(field(j, "nodes"), "nodes");
  const Json& e = field(j, "edges");
  if (!e.is_array()) bad("edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) bad("edges are [a, b] pairs");
    edges.emplace_back(int_of(pair[0], "edge end"), int_of(pair[1], "edge end"));
  }
  return DualTree(nodes, std::move(edges));
}

Json to_json(const RootedPlan& p, int d) {
  Json children = Json::object();
  for (const auto& [node, list] : p.child_map()) {
    Json arr = Json::array();
    for (const auto& c : list) {
      Json e = {{"node", c.node}};
      if (c.face) e["face"] = *c.face;
      arr.push_back(e);
    }
    children[std::to_string(node)] = arr;
  }
  return {{"d", d}, {"root", p.root()}, {"children", children}};
}

PlanDocument plan_from_json(const Json& j) {
  const int d = int_of(field(j, "d"), "d");
  const int root = int_of(field(j, "root"), "root");
  std::map<int, std::vector<ChildEdge>> children;
  if (j.contains("children")) {
    const Json& c = j["children"];
    if (!c.is_object()) bad("children must be an object keyed by node id");
    for (auto it = c.begin(); it != c.end(); ++it) {
      int node = 0;
      try {
        std::size_t used = 0;
        node = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
      } catch (const std::exception&) {
        bad("child keys must be node ids");
      }
      if (!it.value().is_array()) bad("child lists must be arrays");
      for (const auto& e : it.value()) {
        ChildEdge ce{int_of(field(e, "node"), "node"), std::nullopt};
        if (e.contains("face") && !e["face"].is_null()) ce.face = int_of(e["face"], "face");
        children[node].push_back(ce);
      }
    }
  }
  return PlanDocument{d, RootedPlan(root, std::move(children))};
}

Json to_json(const InscribedPolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  Json facets = Json::array();
  for (const auto& f : p.facets) facets.push_back(face_json(f));
  Json j = {{"d", p.d}, {"north", p.north ? Json(*p.north) : Json(nullptr)}, {"vertices", verts}, {"facets", facets}};
  if (!(p.sphere.center == unit_sphere(p.d).center && p.sphere.radius_sq == 1)) j["sphere"] = sphere_json(p.sphere);
  return j;
}

InscribedPolytope polytope_from_json(const Json& j) {
  InscribedPolytope p;
  p.d = int_of(field(j, "d"), "d");
  if (p.d < 2) bad("d must be at least 2");
  if (j.contains("north") && !j["north"].is_null()) p.north = int_of(j["north"], "north");
  p.vertices = points_of(field(j, "vertices"));
  p.facets = faces_of(field(j, "facets"));
  for (const auto& v : p.vertices)
    if (static_cast<int>(v.size()) != p.d) bad("vertex of wrong dimension");
  const int nv = static_cast<int>(p.vertices.size());
  for (const auto& f : p.facets)
    for (int v : f)
      if (v < 0 || v >= nv) bad("facet index out of range");
  if (p.north && (*p.north < 0 || *p.north >= nv)) bad("north index out of range");
  p.sphere = unit_sphere(p.d);
  if (j.contains("sphere")) {
    const Json& s = j["sphere"];
    p.sphere = Sphere{point_from_json(field(s, "center")), scalar_of(field(s, "radius_sq"))};
    if (static_cast<int>(p.sphere.center.size()) != p.d) bad("sphere center of wrong dimension");
  }
  return p;
}

Json to_json(const BuildTrace& t) {
  Json init = Json::array();
  for (const auto& v : t.initial_simplex) init.push_back(to_json(v));
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json e = {{"node", s.node},
              {"facet", face_json(s.facet)},
              {"point", to_json(s.point)},
              {"vertex", s.vertex},
              {"line", nullptr},
              {"lambda", nullptr},
              {"denominator_bits", s.denominator_bits}};
    if (s.line) e["line"] = {{"base", to_json(s.line->base)}, {"direction", to_json(s.line->direction)}};
    if (s.lambda) e["lambda"] = to_string(*s.lambda);
    steps.push_back(e);
  }
  return {{"d", t.d}, {"initial_simplex", init}, {"steps", steps}};
}

BuildTrace trace_from_json(const Json& j) {
  BuildTrace t;
  t.d = int_of(field(j, "d"), "d");
  t.initial_simplex = points_of(field(j, "initial_simplex"));
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  for (const auto& s : steps) {
    TraceStep st{int_of(field(s, "node"), "node"),
                 face_of(field(s, "facet")),
                 point_from_json(field(s, "point")),
                 int_of(field(s, "vertex"), "vertex"),
                 std::nullopt,
                 std::nullopt,
                 0};
    if (s.contains("line") && !s["line"].is_null())
      st.line = Line{point_from_json(field(s["line"], "base")), point_from_json(field(s["line"], "direction"))};
    if (s.contains("lambda") && !s["lambda"].is_null()) st.lambda = scalar_of(s["lambda"]);
    if (s.contains("denominator_bits")) st.denominator_bits = field(s, "denominator_bits").get<std::size_t>();
    t.steps.push_back(std::move(st));
  }
  return t;
}

Json to_json(const DelaunayReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"face", face_json(x.face)}, {"witness", x.witness}});
  return {{"mode", static_cast<int>(r.mode)}, {"mode_name", mode_name(r.mode)}, {"ok", r.ok}, {"violations", v}};
}

Json to_json(const InscribedReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"check", x.check}, {"face", face_json(x.face)}, {"witness", x.witness}});
  return {{"ok", r.ok}, {"violations", v}};
}

Json to_json(const AngleReport& r) {
  return {{"failing_edges", r.failing},
          {"approximate", {{"nine_angle_sum", r.nine_angle_sum}, {"opposite_angle_sums", r.opposite_sums}}}};
}

Json to_json(const CertifyReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json ridges = Json::array();
    for (const auto& x : o.ridge_violations) ridges.push_back({{"face", face_json(x.face)}, {"witness", x.witness}});
    outcomes.push_back({{"seed", o.seed},
                        {"failing_ridges", ridges},
                        {"inversion_pipeline", o.pipeline},
                        {"coplanar", o.coplanar},
                        {"planar_type", o.planar_type},
                        {"angles", o.angles ? to_json(*o.angles) : Json(nullptr)}});
  }
  return {{"d", r.d},
          {"seed", r.seed},
          {"trials", r.trials},
          {"violated", r.violated},
          {"obstructed", r.obstructed},
          {"outcomes", outcomes}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string decimal(const Scalar& s, int digits) {
  if (digits < 0) fail(Errc::BadParameters, "digits must be non-negative");
  mpz_class ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = abs(s.get_num()) * ten;
  const mpz_class den = s.get_den();
  mpz_class q = (2 * num + den) / (2 * den);  // floor, i.e. half away from zero
  std::string body = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(s) < 0 && q != 0 ? "-" : "") + body;
}

std::string to_off(const InscribedPolytope& p, int digits) {
  if (p.facets.empty()) fail(Errc::BadInput, "polytope has no facets");
  if (p.vertices.empty()) fail(Errc::BadInput, "polytope has no vertices");
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json(p).dump())));
  std::ostringstream os;
  if (p.d == 3) {
    os << "OFF\n";
  } else {
    os << "nOFF\n" << p.d << "\n";
  }
  os << "# exact source fnv1a64 " << hash << "\n";
  os << "# coordinates rounded to " << digits << " decimals\n";
  os << p.vertices.size() << ' ' << p.facets.size() << " 0\n";
  for (const auto& v : p.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << decimal(v[i], digits);
    os << '\n';
  }
  for (Face f : p.facets) {
    // Triangles in R^3 are listed counterclockwise seen from outside.
    if (p.d == 3 && f.size() == 3) {
      const std::vector<Point> tri{p.vertices[f[0]], p.vertices[f[1]], p.vertices[f[2]]};
      const auto far = std::find_if(p.vertices.begin(), p.vertices.end(), [&](const Point& q) {
        return std::find(tri.begin(), tri.end(), q) == tri.end();
      });
      if (far != p.vertices.end()) {
        const std::vector<Point> tet{tri[0], tri[1], tri[2], *far};
        if (orientation(tet) > 0) std::swap(f[1], f[2]);
      }
    }
    os << f.size();
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace inscriber
