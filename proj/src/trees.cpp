#include "inscriber/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace inscriber {

DualTree::DualTree(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ <= 0) fail(Errc::EmptyTree, "a dual tree needs at least one node");
  if (static_cast<int>(edges_.size()) != node_count_ - 1)
    fail(Errc::InvalidTree, "a tree on " + std::to_string(node_count_) + " nodes has " +
                                std::to_string(node_count_ - 1) + " edges");
  adj_.assign(node_count_, {});
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_ || a == b)
      fail(Errc::InvalidTree, "bad edge " + std::to_string(a) + "-" + std::to_string(b));
    if (a > b) std::swap(a, b);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
  std::vector<bool> seen(node_count_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != node_count_) fail(Errc::InvalidTree, "graph is not connected");
}

RootedPlan::RootedPlan(int root, std::map<int, std::vector<ChildEdge>> children)
    : root_(root), children_(std::move(children)) {
  std::set<int> seen{root_};
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    nodes_.push_back(u);
    auto it = children_.find(u);
    if (it == children_.end()) continue;
    std::set<int> labels;
    for (const auto& c : it->second) {
      if (!seen.insert(c.node).second) fail(Errc::InvalidPlan, "node " + std::to_string(c.node) + " appears twice");
      if (c.face && !labels.insert(*c.face).second)
        fail(Errc::InvalidPlan, "node " + std::to_string(u) + " has two children on face " + std::to_string(*c.face));
    }
    for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) stack.push_back(c->node);
  }
  for (const auto& [node, _] : children_)
    if (!seen.count(node)) fail(Errc::InvalidPlan, "node " + std::to_string(node) + " is not reachable from the root");
}

const std::vector<ChildEdge>& RootedPlan::children(int node) const {
  static const std::vector<ChildEdge> none;
  auto it = children_.find(node);
  return it == children_.end() ? none : it->second;
}

std::vector<int> RootedPlan::preorder() const { return nodes_; }

DegreeWitness max_degree(const DualTree& t) {
  DegreeWitness w{t.degree(0), 0};
  for (int v = 1; v < t.node_count(); ++v)
    if (t.degree(v) > w.degree) w = {t.degree(v), v};
  return w;
}

InscribabilityDecision decide_inscribable(const DualTree& t) {
  const auto w = max_degree(t);
  if (w.degree <= 3) return {true, w.degree, std::nullopt};
  return {false, w.degree, w.node};
}

RootedPlan root_plan(const DualTree& t, int root) {
  if (root < 0 || root >= t.node_count()) fail(Errc::UnknownNode, std::to_string(root));
  std::map<int, std::vector<ChildEdge>> children;
  std::vector<int> parent(t.node_count(), -1);
  std::deque<int> queue{root};
  parent[root] = root;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : t.neighbors(u)) {
      if (parent[v] != -1) continue;
      parent[v] = u;
      children[u].push_back({v, std::nullopt});
      queue.push_back(v);
    }
  }
  return RootedPlan(root, std::move(children));
}

std::optional<RootedPlan> plan_for_polytope(const DualTree& t, int apex) {
  if (apex < 0 || apex >= t.node_count()) fail(Errc::UnknownNode, std::to_string(apex));
  if (t.node_count() == 1) return std::nullopt;
  if (t.degree(apex) != 1) fail(Errc::InvalidPlan, "apex node " + std::to_string(apex) + " is not a leaf");
  const RootedPlan whole = root_plan(t, apex);
  const int first = whole.children(apex).front().node;
  auto children = whole.child_map();
  children.erase(apex);
  return RootedPlan(first, std::move(children));
}

PlanCheck plan_is_buildable(const RootedPlan& p, int d) {
  for (int node : p.preorder()) {
    const auto& ch = p.children(node);
    if (ch.size() > 2) return {PlanDiagnosis::TooManyChildren, node};
    for (const auto& c : ch)
      if (c.face && (*c.face < 0 || *c.face >= d)) return {PlanDiagnosis::LabelOutOfRange, node};
  }
  return {PlanDiagnosis::Ok, std::nullopt};
}

ExtractedTree extract_dual_tree(const std::vector<Face>& input, int d) {
  if (d < 2) fail(Errc::BadDimension, "d must be at least 2");
  std::set<Face> facets;
  for (Face f : input) {
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) != d || std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(Errc::BadInput, "facets must have d distinct vertices");
    if (!facets.insert(f).second) fail(Errc::BadInput, "duplicate facet");
  }
  std::map<Face, int> ridge_count;
  for (const auto& f : facets)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face r = f;
      r.erase(r.begin() + static_cast<long>(i));
      ++ridge_count[r];
    }
  for (const auto& [r, c] : ridge_count)
    if (c != 2) fail(Errc::BadInput, "facet list is not a closed pseudomanifold");

  // Nodes created in peel order; `hanging[f]` lists the nodes glued onto the
  // current facet f by earlier peels.
  std::map<Face, std::vector<int>> hanging;
  std::vector<std::pair<int, int>> edges;
  std::vector<StackStep> peeled;
  int next_node = 0;
  while (true) {
    std::set<int> verts;
    for (const auto& f : facets) verts.insert(f.begin(), f.end());
    if (static_cast<int>(verts.size()) == d + 1 && static_cast<int>(facets.size()) == d + 1) break;
    std::optional<int> simple;
    Face link;
    std::vector<Face> star;
    for (int v : verts) {
      std::vector<Face> s;
      std::set<int> l;
      for (const auto& f : facets)
        if (std::binary_search(f.begin(), f.end(), v)) {
          s.push_back(f);
          for (int w : f)
            if (w != v) l.insert(w);
        }
      if (static_cast<int>(s.size()) == d && static_cast<int>(l.size()) == d) {
        Face candidate(l.begin(), l.end());
        if (facets.count(candidate)) continue;
        simple = v;
        link = std::move(candidate);
        star = std::move(s);
        break;
      }
    }
    if (!simple) fail(Errc::NotStacked, "no simple vertex left to peel");
    const int node = next_node++;
    for (const auto& f : star) {
      auto it = hanging.find(f);
      if (it != hanging.end()) {
        for (int child : it->second) edges.emplace_back(node, child);
        hanging.erase(it);
      }
      facets.erase(f);
    }
    facets.insert(link);
    hanging[link].push_back(node);
    peeled.push_back({*simple, link});
  }
  const int base = next_node++;
  for (const auto& [f, nodes] : hanging)
    for (int child : nodes) edges.emplace_back(base, child);

  // Renumber: base simplex 0, then stacking order (reverse of peeling).
  const int total = next_node;
  auto renum = [&](int node) { return node == base ? 0 : total - 1 - node; };
  for (auto& [a, b] : edges) {
    a = renum(a);
    b = renum(b);
  }
  std::sort(edges.begin(), edges.end());
  StackingOrder order;
  std::set<int> base_verts;
  for (const auto& f : facets) base_verts.insert(f.begin(), f.end());
  order.base.assign(base_verts.begin(), base_verts.end());
  order.steps.assign(peeled.rbegin(), peeled.rend());
  return ExtractedTree{DualTree(total, std::move(edges)), std::move(order)};
}

int count_simple_vertices(const DualTree& t) {
  if (t.node_count() < 2) fail(Errc::EmptyTree, "simple-vertex count needs at least two nodes");
  int leaves = 0;
  for (int v = 0; v < t.node_count(); ++v)
    if (t.degree(v) == 1) ++leaves;
  return leaves;
}

namespace {

std::string rooted_code(int u, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> subs;
  for (int v : adj[u])
    if (v != parent) subs.push_back(rooted_code(v, u, adj));
  std::sort(subs.begin(), subs.end());
  std::string s = "(";
  for (const auto& c : subs) s += c;
  return s + ")";
}

}  // namespace

std::string canonical_form(const DualTree& t) {
  const int n = t.node_count();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = t.neighbors(v);
  // Centers by repeated leaf stripping.
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int u : layer)
      for (int v : adj[u])
        if (--deg[v] == 1) next.push_back(v);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(c, -1, adj);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string canonical_form(const RootedPlan& p) {
  std::function<std::string(int)> code = [&](int u) {
    std::vector<std::string> subs;
    for (const auto& c : p.children(u)) subs.push_back(code(c.node));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (const auto& c : subs) s += c;
    return s + ")";
  };
  return code(p.root());
}

std::vector<DualTree> enumerate_trees(int max_nodes) {
  std::vector<DualTree> out;
  if (max_nodes < 1) return out;
  std::vector<DualTree> level{DualTree(1, {})};
  out.push_back(level.front());
  for (int n = 2; n <= max_nodes; ++n) {
    std::map<std::string, DualTree> next;
    for (const auto& t : level) {
      for (int v = 0; v < t.node_count(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, t.node_count());
        DualTree grown(n, std::move(edges));
        next.emplace(canonical_form(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [_, t] : next) level.push_back(t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace inscriber
