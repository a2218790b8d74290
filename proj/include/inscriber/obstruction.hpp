#pragma once

// Why three subdivisions at one simple vertex cannot stay Delaunay: the split
// geometry of a once-subdivided simplex, the planar angle obstruction, and the
// inversion that reduces the general case to the plane.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "inscriber/complex.hpp"

namespace inscriber {

// A simplex conv(v_1..v_d) in R^(d-1) subdivided at an interior c, with
// optional further points r_i subdividing F_i (the facet missing v_i).
struct SplitInstance {
  std::vector<Point> v;
  Point c;
  std::vector<Point> r;
};

// Vertex ids: v_i is i-1, c is d, r_i is d+i.
Triangulation split_complex(const SplitInstance& s);
Triangulation subdivided_complex(const SplitInstance& s);

// Facet F_i (1-based) of split_complex as sorted ids.
Face split_facet(int d, int i);

struct SplitGeometry {
  int d = 0;
  int k = 0;
  Point c;
  std::vector<Point> v;
  std::vector<Point> span_f;  // c, v_1..v_k
  std::vector<Point> span_g;  // c, v_(k+1)..v_d
  Line ell;                   // based at c
  Sphere circ_f;
  Sphere circ_g;
  Point x, x_bar, y_bar, y;
  // Parameters along ell; c sits at 0 and t_x <= t_x_bar < 0 < t_y_bar <= t_y.
  Scalar t_x, t_x_bar, t_y_bar, t_y;
};

// delta must be one simplex subdivided once; its vertex in every facet is c
// and the others, by ascending id, are v_1..v_d.
SplitGeometry split_geometry(const Triangulation& delta, int k);

struct SplitPositionReport {
  bool ok;
  std::vector<SphereSide> sides;  // x against circ(F_i), i = 1..d
};

SplitPositionReport verify_split_positions(const SplitGeometry& g, const Triangulation& delta);

enum class ProofCase { MissesC, MissesFSide, MissesGSide };

struct NewFacetCheck {
  Face facet;
  ProofCase proof_case;
  SphereSide side;  // x against its circumsphere
};

struct SubdivisionReport {
  bool hypothesis;  // the subdivided complex is Delaunay
  bool ok;          // x outside every new circumsphere (meaningful only under the hypothesis)
  int subdivided;   // i of the subdivided F_i
  std::vector<NewFacetCheck> facets;
  std::array<int, 3> case_counts;
};

// `sub` is delta with exactly one F_i (i <= k) subdivided by one new vertex.
SubdivisionReport verify_single_subdivision(const Triangulation& delta, const Triangulation& sub, const SplitGeometry& g);

// Triangle ABC subdivided at x, then xBC at a, xCA at b, xAB at c. The points
// may live in any R^m as long as they are coplanar.
struct Config2D {
  Point A, B, C, x, a, b, c;
};

bool has_planar_type(const Config2D& cfg);

struct AngleReport {
  std::array<bool, 3> fails;                 // edges Ax, Bx, Cx
  std::vector<std::string> failing;          // names of the failing edges
  double nine_angle_sum;                     // approximate
  std::array<double, 3> opposite_sums;       // approximate, per edge
};

AngleReport angle_obstruction_2d(const Config2D& cfg);

struct InversionResult {
  std::vector<Point> inverted;    // image of every vertex of t, by id
  std::vector<Face> region;       // facets without x on their circumsphere
  std::size_t coplanar_rank;      // affine rank of c', v'_1, v'_2, v'_3
  bool coplanar;
  std::array<int, 3> r_ids;       // ids of r_1, r_2, r_3 in t
  std::array<Point, 4> k_coords;  // barycentrics in K of c', pi(r'_1..3)
  Config2D projected;             // A,B,C = v'_1..v'_3, x = c', a,b,c = pi(r'_i)
};

// t holds split_complex's vertices at the same ids plus points subdividing
// F_1, F_2, F_3; g must use k = 3.
InversionResult reduce_by_inversion(const Triangulation& t, const SplitGeometry& g);

// Seeded source of bounded-denominator rationals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi);
  // p/q with 1 <= q <= den_bound and |p/q| <= bound.
  Scalar rational(int den_bound, int bound = 1);
  // Positive weights with bounded denominators summing to one.
  std::vector<Scalar> weights(std::size_t n, int den_bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index);

inline constexpr int kDenominatorBound = 64;

// Random simplex and interior c. Each r_i (i = 1..subdivisions) subdivides F_i
// and, when each_delaunay holds, keeps split_complex + {r_i} Delaunay.
SplitInstance random_split(int d, int subdivisions, Rng& rng, bool each_delaunay = true);

Config2D random_planar_config(Rng& rng);

struct TrialOutcome {
  std::uint64_t seed;
  std::vector<Violation> ridge_violations;  // InteriorRidgesLocal
  std::optional<AngleReport> angles;        // direct (d = 3) or after projection
  bool pipeline = false;
  bool coplanar = false;
  bool planar_type = false;
};

struct CertifyReport {
  int d;
  std::uint64_t seed;
  int trials;
  int violated;     // trials with a ridge violation
  int obstructed;   // trials whose planar obstruction found a failing edge
  std::vector<TrialOutcome> outcomes;
};

// Random three-fold subdivisions at a simple vertex; every trial runs the
// direct ridge check and the planar obstruction (through the inversion when
// d > 3).
CertifyReport certify_sweep(int d, int trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace inscriber
