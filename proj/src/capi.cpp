#include "inscriber/inscriber.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <string>

#include "inscriber/builder.hpp"
#include "inscriber/generators.hpp"
#include "inscriber/obstruction.hpp"
#include "inscriber/serialize.hpp"

using namespace inscriber;

struct insc_tree {
  DualTree tree;
};
struct insc_plan {
  int d;
  RootedPlan plan;
};
struct insc_triangulation {
  Triangulation t;
};
struct insc_polytope {
  InscribedPolytope p;
};
struct insc_build {
  int d;
  BuildResult result;
  std::optional<RootedPlan> plan;
};

namespace {

thread_local std::string last_error;

insc_status status_of(Errc e) { return static_cast<insc_status>(static_cast<int>(e) + 1); }

// Runs fn, translating exceptions into a status and the thread's message.
template <typename Fn>
insc_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return INSC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return INSC_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return INSC_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return INSC_E_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Scalar scale_of(const char* text) { return text ? parse_scalar(text) : Scalar(1); }

BuildOptions options(const char* scale, int cap) {
  BuildOptions o;
  o.scale = scale_of(scale);
  if (cap > 0) o.halving_cap = cap;
  return o;
}

// Null-argument failures map to their own status rather than INTERNAL.
template <typename Fn>
insc_status checked(std::initializer_list<const void*> args, Fn&& fn) {
  for (const void* a : args)
    if (!a) {
      last_error = "null argument";
      return INSC_E_NULL_ARGUMENT;
    }
  return guarded(std::forward<Fn>(fn));
}

}  // namespace

extern "C" {

const char* insc_version(void) { return "0.1.0"; }

const char* insc_status_name(insc_status status) {
  switch (status) {
    case INSC_OK: return "Ok";
    case INSC_E_NULL_ARGUMENT: return "NullArgument";
    case INSC_E_OUT_OF_MEMORY: return "OutOfMemory";
    case INSC_E_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(Errc::NotObstructed)) return errc_name(static_cast<Errc>(code));
  return "Unknown";
}

const char* insc_last_error(void) { return last_error.c_str(); }

void insc_string_free(char* s) { std::free(s); }

insc_status insc_tree_parse(const char* json, insc_tree** out) {
  return checked({json, out}, [&] { *out = new insc_tree{tree_from_json(parse_json(json))}; });
}

insc_status insc_tree_to_json(const insc_tree* t, char** out) {
  return checked({t, out}, [&] { *out = copy_string(dump(to_json(t->tree))); });
}

void insc_tree_free(insc_tree* t) { delete t; }

insc_status insc_tree_decide(const insc_tree* t, int* inscribable, int* max_degree, int* witness) {
  return checked({t, inscribable, max_degree, witness}, [&] {
    const auto dec = decide_inscribable(t->tree);
    *inscribable = dec.inscribable ? 1 : 0;
    *max_degree = dec.max_degree;
    *witness = dec.witness ? *dec.witness : -1;
  });
}

insc_status insc_tree_default_apex(const insc_tree* t, int* apex) {
  return checked({t, apex}, [&] {
    *apex = 0;
    for (int v = 0; v < t->tree.node_count(); ++v)
      if (t->tree.degree(v) <= 1) {
        *apex = v;
        return;
      }
  });
}

insc_status insc_plan_parse(const char* json, insc_plan** out) {
  return checked({json, out}, [&] {
    auto doc = plan_from_json(parse_json(json));
    *out = new insc_plan{doc.d, std::move(doc.plan)};
  });
}

insc_status insc_plan_to_json(const insc_plan* p, char** out) {
  return checked({p, out}, [&] { *out = copy_string(dump(to_json(p->plan, p->d))); });
}

void insc_plan_free(insc_plan* p) { delete p; }

int insc_plan_dimension(const insc_plan* p) { return p ? p->d : 0; }

insc_status insc_plan_check(const insc_plan* p, int d, int* diagnosis, int* node) {
  return checked({p, diagnosis, node}, [&] {
    const auto c = plan_is_buildable(p->plan, d > 0 ? d : p->d);
    *diagnosis = static_cast<int>(c.diagnosis);
    *node = c.node ? *c.node : -1;
  });
}

insc_status insc_triangulation_parse(const char* json, insc_triangulation** out) {
  return checked({json, out}, [&] { *out = new insc_triangulation{triangulation_from_json(parse_json(json))}; });
}

insc_status insc_triangulation_to_json(const insc_triangulation* t, char** out) {
  return checked({t, out}, [&] { *out = copy_string(dump(to_json(t->t))); });
}

void insc_triangulation_free(insc_triangulation* t) { delete t; }

insc_status insc_triangulation_check_delaunay(const insc_triangulation* t, int mode, int* ok, char** report) {
  return checked({t, ok}, [&] {
    if (mode < 1 || mode > 4) fail(Errc::BadParameters, "mode must be 1, 2, 3 or 4");
    const auto rep = check_delaunay(t->t, static_cast<DelaunayMode>(mode));
    *ok = rep.ok ? 1 : 0;
    if (report) *report = copy_string(dump(to_json(rep)));
  });
}

insc_status insc_triangulation_lift(const insc_triangulation* t, insc_polytope** out) {
  return checked({t, out}, [&] { *out = new insc_polytope{lift_to_inscribed(t->t)}; });
}

insc_status insc_polytope_parse(const char* json, insc_polytope** out) {
  return checked({json, out}, [&] { *out = new insc_polytope{polytope_from_json(parse_json(json))}; });
}

insc_status insc_polytope_to_json(const insc_polytope* p, char** out) {
  return checked({p, out}, [&] { *out = copy_string(dump(to_json(p->p))); });
}

void insc_polytope_free(insc_polytope* p) { delete p; }

insc_status insc_polytope_verify(const insc_polytope* p, int* ok, char** report) {
  return checked({p, ok}, [&] {
    const auto rep = verify_inscribed(p->p);
    *ok = rep.ok ? 1 : 0;
    if (report) *report = copy_string(dump(to_json(rep)));
  });
}

insc_status insc_polytope_to_off(const insc_polytope* p, int digits, char** out) {
  return checked({p, out}, [&] { *out = copy_string(to_off(p->p, digits)); });
}

insc_status insc_bounded_degree(int d, int n, int halving_cap, insc_polytope** out) {
  return checked({out}, [&] { *out = new insc_polytope{build_bounded_degree(d, n, halving_cap > 0 ? halving_cap : 256)}; });
}

insc_status insc_polygon(int n, insc_polytope** out) {
  return checked({out}, [&] { *out = new insc_polytope{inscribed_polygon(n)}; });
}

insc_status insc_cyclic(const char* method, int d, int n, insc_polytope** out) {
  return checked({method, out}, [&] {
    const std::string m = method;
    if (m == "standard") {
      *out = new insc_polytope{cyclic_standard(d, n).polytope};
    } else if (m == "spherical") {
      *out = new insc_polytope{cyclic_spherical(d, n, default_spherical_params(n))};
    } else if (m == "trig") {
      *out = new insc_polytope{cyclic_trig(d, n, default_half_tangents(n))};
    } else {
      fail(Errc::BadParameters, "unknown method " + m);
    }
  });
}

insc_status insc_build_path(int d, int n, const char* scale, int halving_cap, insc_build** out) {
  return checked({out}, [&] {
    BuildResult r = build_path(d, n, options(scale, halving_cap));
    // A path build executes the chain plan 0 -> 1 -> ... -> n-1.
    std::map<int, std::vector<ChildEdge>> chain;
    for (int i = 0; i + 1 < n; ++i) chain[i] = {{i + 1, std::nullopt}};
    *out = new insc_build{d, std::move(r), RootedPlan(0, chain)};
  });
}

insc_status insc_build_plan(const insc_plan* p, int d, const char* scale, int halving_cap, insc_build** out) {
  return checked({p, out}, [&] {
    const int dim = d > 0 ? d : p->d;
    *out = new insc_build{dim, build_from_plan(p->plan, dim, options(scale, halving_cap)), p->plan};
  });
}

insc_status insc_build_tree(const insc_tree* t, int apex, int d, const char* scale, int halving_cap,
                            insc_build** out) {
  return checked({t, out}, [&] {
    int a = apex;
    if (a < 0 && insc_tree_default_apex(t, &a) != INSC_OK) fail(Errc::InvalidTree, last_error);
    auto tb = build_from_tree(t->tree, a, d, options(scale, halving_cap));
    *out = new insc_build{d, std::move(tb.build), std::move(tb.plan)};
  });
}

void insc_build_free(insc_build* b) { delete b; }

insc_status insc_build_triangulation(const insc_build* b, insc_triangulation** out) {
  return checked({b, out}, [&] { *out = new insc_triangulation{b->result.triangulation}; });
}

insc_status insc_build_polytope(const insc_build* b, insc_polytope** out) {
  return checked({b, out}, [&] { *out = new insc_polytope{lift_to_inscribed(b->result.triangulation)}; });
}

insc_status insc_build_trace_json(const insc_build* b, char** out) {
  return checked({b, out}, [&] { *out = copy_string(dump(to_json(b->result.trace))); });
}

insc_status insc_build_plan_json(const insc_build* b, char** out) {
  return checked({b, out}, [&] { *out = b->plan ? copy_string(dump(to_json(*b->plan, b->d))) : nullptr; });
}

insc_status insc_build_verify(const insc_build* b, int* ok, char** report) {
  return checked({b, ok}, [&] {
    const Triangulation& t = b->result.triangulation;
    const auto m1 = check_delaunay(t, DelaunayMode::FacetsEmpty);
    const auto m4 = check_delaunay(t, DelaunayMode::InteriorRidgesLocal);
    const bool replayed = replay(b->result.trace) == t;
    bool iso = true;
    if (b->plan && !b->result.trace.steps.empty())
      iso = canonical_form(recovered_plan(b->result.trace)) == canonical_form(*b->plan);
    Json poly = nullptr;
    bool inscribed = false;
    if (m1.ok) {
      const auto rep = verify_inscribed(lift_to_inscribed(t));
      inscribed = rep.ok;
      poly = to_json(rep);
    }
    *ok = m1.ok && m4.ok && replayed && iso && inscribed ? 1 : 0;
    if (report) {
      Json j = {{"ok", *ok == 1},
                {"delaunay", Json::array({to_json(m1), to_json(m4)})},
                {"replay_identical", replayed},
                {"plan_isomorphic", iso},
                {"inscribed", poly}};
      *report = copy_string(dump(j));
    }
  });
}

insc_status insc_trace_replay(const char* trace_json, insc_triangulation** out) {
  return checked({trace_json, out}, [&] { *out = new insc_triangulation{replay(trace_from_json(parse_json(trace_json)))}; });
}

insc_status insc_fvectors_csv(long long f0_max, char** out) {
  return checked({out}, [&] { *out = copy_string(fvectors_csv(fvector_families(f0_max))); });
}

insc_status insc_certify(const insc_tree* t, int d, int trials, uint64_t seed, int* all_violated, char** report) {
  return checked({t, all_violated}, [&] {
    const auto dec = decide_inscribable(t->tree);
    if (dec.inscribable)
      fail(Errc::NotObstructed, "every node has degree at most 3; nothing to certify");
    const auto rep = certify_sweep(d, trials, seed);
    *all_violated = rep.violated == rep.trials && rep.obstructed == rep.trials ? 1 : 0;
    if (report) {
      Json j = to_json(rep);
      j["witness_node"] = *dec.witness;
      j["witness_degree"] = dec.max_degree;
      *report = copy_string(dump(j));
    }
  });
}

}  // extern "C"
