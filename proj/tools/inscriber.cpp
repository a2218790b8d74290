// Command-line front end. Talks to the library only through inscriber.h.
//
// Exit codes: 0 affirmative, 1 negative result with evidence, 2 input error,
// 3 internal verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "inscriber/inscriber.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kInternal = 3 };

// Failure carrying the exit code it should produce.
struct Failure {
  int code;
  std::string message;
};

int exit_for(insc_status s) {
  switch (s) {
    case INSC_OK: return kOk;
    case INSC_E_PLAN_NOT_BUILDABLE:
    case INSC_E_NOT_OBSTRUCTED: return kNegative;
    case INSC_E_VERIFICATION_FAILED:
    case INSC_E_SEARCH_EXHAUSTED:
    case INSC_E_GROWTH_CAP_EXCEEDED:
    case INSC_E_OUT_OF_MEMORY:
    case INSC_E_INTERNAL: return kInternal;
    default: return kInput;
  }
}

void check(insc_status s) {
  if (s == INSC_OK) return;
  // Library messages already lead with the error name.
  std::string msg = insc_last_error();
  if (msg.rfind(insc_status_name(s), 0) != 0) msg = std::string(insc_status_name(s)) + ": " + msg;
  throw Failure{exit_for(s), msg};
}

struct Deleter {
  void operator()(insc_tree* p) const { insc_tree_free(p); }
  void operator()(insc_plan* p) const { insc_plan_free(p); }
  void operator()(insc_triangulation* p) const { insc_triangulation_free(p); }
  void operator()(insc_polytope* p) const { insc_polytope_free(p); }
  void operator()(insc_build* p) const { insc_build_free(p); }
  void operator()(char* p) const { insc_string_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  Handle<char> h(s);
  return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kInput, "cannot write " + path.string()};
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// Emits text to a file, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    write_file(path, text);
  }
}

enum class Kind { Tree, Plan, Triangulation, Polytope };

// Document kind from its top-level keys.
Kind kind_of(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Failure{kInput, std::string("ParseError: ") + e.what()};
  }
  if (!j.is_object()) throw Failure{kInput, "ParseError: expected a JSON object"};
  if (j.contains("edges")) return Kind::Tree;
  if (j.contains("children")) return Kind::Plan;
  if (j.contains("dim")) return Kind::Triangulation;
  if (j.contains("north") || j.contains("d")) return Kind::Polytope;
  throw Failure{kInput, "ParseError: unrecognized document"};
}

Handle<insc_tree> load_tree(const std::string& text) {
  insc_tree* t = nullptr;
  check(insc_tree_parse(text.c_str(), &t));
  return Handle<insc_tree>(t);
}

uint64_t default_seed() {
  if (const char* env = std::getenv("INSCRIBER_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Failure{kInput, "INSCRIBER_SEED is not an unsigned integer"};
  }
  return 0;
}

// decide ---------------------------------------------------------------------

struct DecideArgs {
  std::string input;
  bool json = false;
};

int run_decide(const DecideArgs& a) {
  auto t = load_tree(read_file(a.input));
  int inscribable = 0, max_degree = 0, witness = -1;
  check(insc_tree_decide(t.get(), &inscribable, &max_degree, &witness));
  if (a.json) {
    Json j = {{"inscribable", inscribable == 1}, {"max_degree", max_degree},
              {"witness", witness < 0 ? Json(nullptr) : Json(witness)}};
    std::cout << j.dump(2) << '\n';
  } else if (inscribable) {
    std::cout << "Inscribable (max degree " << max_degree << ")\n";
  } else {
    std::cout << "NotInscribable (witness node " << witness << " has degree " << max_degree << ")\n";
  }
  return inscribable ? kOk : kNegative;
}

// build ----------------------------------------------------------------------

struct BuildArgs {
  std::string input;
  std::optional<int> path;
  std::optional<int> root;
  std::optional<int> d;  // plans carry their own; everything else defaults to 3
  std::string scale = "1";
  int halving_cap = 256;
  std::string out = ".";
};

int run_build(const BuildArgs& a) {
  if (a.path.has_value() == !a.input.empty()) throw Failure{kInput, "give exactly one of an input file or --path"};
  int d = a.d.value_or(3);
  if (d < 2) throw Failure{kInput, "BadDimension: --d must be at least 2"};
  const fs::path dir = a.out;
  Handle<insc_build> build;
  insc_build* raw = nullptr;
  int polygon = -1;  // node count for the d = 2 special case

  if (a.path) {
    if (*a.path < 0) throw Failure{kInput, "BadParameters: --path must be non-negative"};
    if (d == 2) polygon = *a.path;
    else check(insc_build_path(d, *a.path, a.scale.c_str(), a.halving_cap, &raw));
  } else {
    const std::string text = read_file(a.input);
    if (kind_of(text) == Kind::Tree) {
      auto t = load_tree(text);
      int inscribable = 0, max_degree = 0, witness = -1;
      check(insc_tree_decide(t.get(), &inscribable, &max_degree, &witness));
      if (!inscribable) {
        std::cerr << "PlanNotBuildable: node " << witness << " has degree " << max_degree << '\n';
        return kNegative;
      }
      Json j = Json::parse(text);
      if (d == 2) polygon = j["nodes"].get<int>() - 1;
      else check(insc_build_tree(t.get(), a.root.value_or(-1), d, a.scale.c_str(), a.halving_cap, &raw));
    } else if (kind_of(text) == Kind::Plan) {
      insc_plan* p = nullptr;
      check(insc_plan_parse(text.c_str(), &p));
      Handle<insc_plan> plan(p);
      if (!a.d) d = insc_plan_dimension(plan.get());
      if (d < 2) throw Failure{kInput, "BadDimension: plan dimension must be at least 2"};
      int diagnosis = 0, node = -1;
      check(insc_plan_check(plan.get(), d, &diagnosis, &node));
      if (diagnosis != 0) {
        std::cerr << "PlanNotBuildable: node " << node
                  << (diagnosis == 1 ? " has more than two children" : " has a face label out of range") << '\n';
        return kNegative;
      }
      if (d == 2) {
        Json j = Json::parse(text);
        int nodes = 1;
        for (const auto& [key, kids] : j["children"].items()) nodes += static_cast<int>(kids.size());
        polygon = nodes;
      } else {
        check(insc_build_plan(plan.get(), d, a.scale.c_str(), a.halving_cap, &raw));
      }
    } else {
      throw Failure{kInput, "build expects a tree or plan document"};
    }
  }

  if (polygon >= 0) {
    insc_polytope* p = nullptr;
    check(insc_polygon(polygon, &p));
    Handle<insc_polytope> poly(p);
    int ok = 0;
    check(insc_polytope_verify(poly.get(), &ok, nullptr));
    if (!ok) throw Failure{kInternal, "VerificationFailed: polygon"};
    char* s = nullptr;
    check(insc_polytope_to_json(poly.get(), &s));
    write_file(dir / "polytope.json", take(s));
    std::cout << "inscribed " << polygon + 3 << "-gon written to " << (dir / "polytope.json").string() << '\n';
    return kOk;
  }

  build.reset(raw);
  int ok = 0;
  char* report = nullptr;
  check(insc_build_verify(build.get(), &ok, &report));
  const std::string rep = take(report);
  if (!ok) {
    std::cerr << rep << '\n';
    throw Failure{kInternal, "VerificationFailed: build output rejected; nothing written"};
  }
  insc_triangulation* tr = nullptr;
  check(insc_build_triangulation(build.get(), &tr));
  Handle<insc_triangulation> tri(tr);
  insc_polytope* pr = nullptr;
  check(insc_build_polytope(build.get(), &pr));
  Handle<insc_polytope> poly(pr);

  char* s = nullptr;
  check(insc_triangulation_to_json(tri.get(), &s));
  write_file(dir / "triangulation.json", take(s));
  check(insc_polytope_to_json(poly.get(), &s));
  write_file(dir / "polytope.json", take(s));
  check(insc_build_trace_json(build.get(), &s));
  write_file(dir / "trace.json", take(s));
  s = nullptr;
  check(insc_build_plan_json(build.get(), &s));
  if (s) write_file(dir / "plan.json", take(s));

  const Json pj = Json::parse(read_file((dir / "polytope.json").string()));
  std::cout << "verified: " << pj["vertices"].size() << " vertices, " << pj["facets"].size()
            << " facets; written to " << dir.string() << '\n';
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string mode = "inscribed";
  bool json = false;
};

void print_violations(const Json& report) {
  for (const auto& v : report["violations"]) {
    std::cout << "  violation";
    if (v.contains("check")) std::cout << " [" << v["check"].get<std::string>() << "]";
    std::cout << " face " << v["face"].dump() << " witness " << v["witness"].dump() << '\n';
  }
}

int run_verify(const VerifyArgs& a) {
  const std::string text = read_file(a.input);
  const Kind kind = kind_of(text);
  int mode = 0;
  if (a.mode.rfind("delaunay:", 0) == 0) {
    const std::string m = a.mode.substr(9);
    if (m.size() != 1 || m[0] < '1' || m[0] > '4') throw Failure{kInput, "mode must be delaunay:1..4"};
    mode = m[0] - '0';
  } else if (a.mode != "inscribed") {
    throw Failure{kInput, "mode must be inscribed or delaunay:<1..4>"};
  }

  int ok = 0;
  char* report = nullptr;
  if (kind == Kind::Triangulation) {
    insc_triangulation* t = nullptr;
    check(insc_triangulation_parse(text.c_str(), &t));
    Handle<insc_triangulation> tri(t);
    if (mode > 0) {
      check(insc_triangulation_check_delaunay(tri.get(), mode, &ok, &report));
    } else {
      insc_polytope* p = nullptr;
      const insc_status s = insc_triangulation_lift(tri.get(), &p);
      if (s != INSC_OK) {
        // Lifting needs a Delaunay input; report that instead of a parse error.
        check(insc_triangulation_check_delaunay(tri.get(), 1, &ok, &report));
        if (ok) check(s);
      } else {
        Handle<insc_polytope> poly(p);
        check(insc_polytope_verify(poly.get(), &ok, &report));
      }
    }
  } else if (kind == Kind::Polytope) {
    if (mode > 0) throw Failure{kInput, "delaunay modes apply to triangulation documents"};
    insc_polytope* p = nullptr;
    check(insc_polytope_parse(text.c_str(), &p));
    Handle<insc_polytope> poly(p);
    check(insc_polytope_verify(poly.get(), &ok, &report));
  } else {
    throw Failure{kInput, "verify expects a polytope or triangulation document"};
  }
  const Json rep = Json::parse(take(report));
  if (a.json) {
    std::cout << rep.dump(2) << '\n';
  } else {
    std::cout << (ok ? "OK" : "FAILED") << " (" << a.mode << ", " << rep["violations"].size() << " violations)\n";
    print_violations(rep);
  }
  return ok ? kOk : kNegative;
}

// generate -------------------------------------------------------------------

struct CyclicArgs {
  std::string method = "spherical";
  int d = 4;
  int n = 7;
  std::string out = "polytope.json";
};

int run_cyclic(const CyclicArgs& a) {
  insc_polytope* p = nullptr;
  check(insc_cyclic(a.method.c_str(), a.d, a.n, &p));
  Handle<insc_polytope> poly(p);
  int ok = 0;
  check(insc_polytope_verify(poly.get(), &ok, nullptr));
  if (!ok) throw Failure{kInternal, "VerificationFailed: generated polytope"};
  char* s = nullptr;
  check(insc_polytope_to_json(poly.get(), &s));
  emit(a.out, take(s));
  if (a.out != "-") std::cerr << "C_" << a.d << "(" << a.n << ") via " << a.method << " written to " << a.out << '\n';
  return kOk;
}

struct FvectorArgs {
  long long f0_max = 20;
  std::string out = "fvectors.csv";
};

int run_fvectors(const FvectorArgs& a) {
  char* s = nullptr;
  check(insc_fvectors_csv(a.f0_max, &s));
  emit(a.out, take(s));
  return kOk;
}

// certify --------------------------------------------------------------------

struct CertifyArgs {
  std::string input;
  int d = 3;
  int trials = 100;
  std::optional<uint64_t> seed;
  bool json = false;
};

int run_certify(const CertifyArgs& a) {
  auto t = load_tree(read_file(a.input));
  const uint64_t seed = a.seed ? *a.seed : default_seed();
  int all = 0;
  char* report = nullptr;
  const insc_status s = insc_certify(t.get(), a.d, a.trials, seed, &all, &report);
  if (s == INSC_E_NOT_OBSTRUCTED) {
    std::cout << insc_last_error() << '\n';
    return kNegative;
  }
  check(s);
  Json rep = Json::parse(take(report));
  if (a.json) {
    std::cout << rep.dump(2) << '\n';
  } else {
    std::cout << "node " << rep["witness_node"] << " (degree " << rep["witness_degree"] << "), d = " << a.d
              << ", seed " << seed << '\n'
              << "violated " << rep["violated"] << "/" << rep["trials"] << ", planar obstruction "
              << rep["obstructed"] << "/" << rep["trials"] << '\n';
  }
  if (!all) throw Failure{kInternal, "VerificationFailed: a trial showed no Delaunay violation"};
  return kOk;
}

// export ---------------------------------------------------------------------

struct ExportArgs {
  std::string input;
  std::string format = "off";
  int digits = 17;
  std::string out = "-";
};

int run_export(const ExportArgs& a) {
  if (a.format != "off") throw Failure{kInput, "only --format off is supported"};
  const std::string text = read_file(a.input);
  insc_polytope* p = nullptr;
  check(insc_polytope_parse(text.c_str(), &p));
  Handle<insc_polytope> poly(p);
  char* s = nullptr;
  check(insc_polytope_to_off(poly.get(), a.digits, &s));
  emit(a.out, take(s));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inscribability of stacked polytopes: decide, build, verify, certify"};
  app.set_version_flag("--version", std::string(insc_version()));
  app.require_subcommand(1);

  DecideArgs decide;
  auto* c_decide = app.add_subcommand("decide", "Decide inscribability from a dual tree");
  c_decide->add_option("tree", decide.input, "tree.json")->required();
  c_decide->add_flag("--json", decide.json, "Machine-readable report");

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Construct a Delaunay triangulation and inscribed polytope");
  c_build->add_option("input", build.input, "plan.json or tree.json");
  c_build->add_option("--path", build.path, "Build the chain plan with n nodes");
  c_build->add_option("--root", build.root, "Apex leaf of a tree input");
  c_build->add_option("--d", build.d, "Polytope dimension (default 3, or the plan's own)");
  c_build->add_option("--scale", build.scale, "Root scale as p/q")->capture_default_str();
  c_build->add_option("--halving-cap", build.halving_cap, "Maximum halvings per point search")->capture_default_str();
  c_build->add_option("--out", build.out, "Output directory")->capture_default_str();

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Exact verification of a polytope or triangulation");
  c_verify->add_option("input", verify.input, "polytope.json or triangulation.json")->required();
  c_verify->add_option("--mode", verify.mode, "inscribed or delaunay:<1..4>")->capture_default_str();
  c_verify->add_flag("--json", verify.json, "Machine-readable report");

  auto* c_generate = app.add_subcommand("generate", "Cyclic polytopes and f-vector families");
  c_generate->require_subcommand(1);
  CyclicArgs cyclic;
  auto* c_cyclic = c_generate->add_subcommand("cyclic", "Inscribed cyclic polytope");
  c_cyclic->add_option("--method", cyclic.method, "standard, spherical or trig")
      ->check(CLI::IsMember({"standard", "spherical", "trig"}))
      ->capture_default_str();
  c_cyclic->add_option("--d", cyclic.d)->capture_default_str();
  c_cyclic->add_option("--n", cyclic.n)->capture_default_str();
  c_cyclic->add_option("--out", cyclic.out, "Output file, - for stdout")->capture_default_str();
  FvectorArgs fv;
  auto* c_fv = c_generate->add_subcommand("fvectors", "f-vector families as CSV");
  c_fv->add_option("--f0-max", fv.f0_max)->capture_default_str();
  c_fv->add_option("--out", fv.out, "Output file, - for stdout")->capture_default_str();

  CertifyArgs certify;
  auto* c_certify = app.add_subcommand("certify", "Randomized exact obstruction sweep");
  c_certify->add_option("tree", certify.input, "tree.json")->required();
  c_certify->add_option("--d", certify.d)->capture_default_str();
  c_certify->add_option("--trials", certify.trials)->capture_default_str();
  c_certify->add_option("--seed", certify.seed, "Master seed (default INSCRIBER_SEED, else 0)");
  c_certify->add_flag("--json", certify.json, "Machine-readable report");

  ExportArgs ex;
  auto* c_export = app.add_subcommand("export", "Approximate export for viewers");
  c_export->add_option("polytope", ex.input, "polytope.json")->required();
  c_export->add_option("--format", ex.format)->capture_default_str();
  c_export->add_option("--digits", ex.digits)->capture_default_str();
  c_export->add_option("--out", ex.out, "Output file, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (c_decide->parsed()) return run_decide(decide);
    if (c_build->parsed()) return run_build(build);
    if (c_verify->parsed()) return run_verify(verify);
    if (c_cyclic->parsed()) return run_cyclic(cyclic);
    if (c_fv->parsed()) return run_fvectors(fv);
    if (c_certify->parsed()) return run_certify(certify);
    if (c_export->parsed()) return run_export(ex);
  } catch (const Failure& f) {
    std::cerr << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInput;
}
