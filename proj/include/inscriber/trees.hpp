#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inscriber/complex.hpp"

namespace inscriber {

// Unrooted dual tree of a stacked polytope. Nodes are 0..node_count-1.
class DualTree {
 public:
  DualTree(int node_count, std::vector<std::pair<int, int>> edges);

  int node_count() const { return node_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int node) const { return adj_.at(node); }
  int degree(int node) const { return static_cast<int>(adj_.at(node).size()); }

 private:
  int node_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct ChildEdge {
  int node;
  std::optional<int> face;  // created-face label 0..d-1
};

// Rooted subdivision plan: the root is the first stellar subdivision, every
// child subdivides one of the faces its parent created.
class RootedPlan {
 public:
  RootedPlan(int root, std::map<int, std::vector<ChildEdge>> children);

  int root() const { return root_; }
  const std::vector<ChildEdge>& children(int node) const;
  // Nodes in depth-first preorder, children in stored order.
  std::vector<int> preorder() const;
  std::size_t size() const { return nodes_.size(); }
  const std::map<int, std::vector<ChildEdge>>& child_map() const { return children_; }

 private:
  int root_;
  std::map<int, std::vector<ChildEdge>> children_;
  std::vector<int> nodes_;
};

struct DegreeWitness {
  int degree;
  int node;
};

DegreeWitness max_degree(const DualTree& t);

struct InscribabilityDecision {
  bool inscribable;
  int max_degree;
  std::optional<int> witness;  // a node of degree >= 4
};

InscribabilityDecision decide_inscribable(const DualTree& t);

// Breadth-first orientation away from root, children ordered by node id.
RootedPlan root_plan(const DualTree& t, int root);

// Plan realizing the polytope whose dual tree is t: the leaf `apex` becomes
// the simplex through the north pole, its neighbour the first subdivision.
// Empty for a single-node tree (the simplex itself).
std::optional<RootedPlan> plan_for_polytope(const DualTree& t, int apex);

enum class PlanDiagnosis { Ok, TooManyChildren, LabelOutOfRange };

struct PlanCheck {
  PlanDiagnosis diagnosis;
  std::optional<int> node;
};

PlanCheck plan_is_buildable(const RootedPlan& p, int d);

struct StackStep {
  int vertex;
  Face onto;  // the facet the vertex is stacked onto
};

struct StackingOrder {
  Face base;  // d+1 vertices
  std::vector<StackStep> steps;
};

struct ExtractedTree {
  DualTree tree;  // node 0 is the base simplex, node i the i-th stacking
  StackingOrder order;
};

// Peels simple vertices (smallest id first) off the boundary complex of a
// simplicial d-polytope given as d-element facets.
ExtractedTree extract_dual_tree(const std::vector<Face>& facets, int d);

int count_simple_vertices(const DualTree& t);

// AHU-style canonical strings; equal strings iff isomorphic.
std::string canonical_form(const DualTree& t);
std::string canonical_form(const RootedPlan& p);

// Every unlabeled tree on 1..max_nodes nodes, one representative each.
std::vector<DualTree> enumerate_trees(int max_nodes);

}  // namespace inscriber
