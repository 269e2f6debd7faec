#pragma once
// Graph of localization edges between simple groups. Verified edges are
// backed by engine verdicts, asserted ones carry a literature source.
// Connectivity questions (rigid components, zigzag paths) live here.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gloc/atlas.hpp"
#include "gloc/localization.hpp"
#include "gloc/rigid_data.hpp"

namespace gloc {

enum class EdgeStatus { verified, asserted };

inline const char* to_string(EdgeStatus s) {
  return s == EdgeStatus::verified ? "verified" : "asserted";
}

struct LocEdge {
  std::string from, to;
  EdgeStatus status = EdgeStatus::asserted;
  std::string source;
};

// A walk in the graph; forward[i] says whether the step from nodes[i] to
// nodes[i+1] follows the edge direction or runs against it.
struct Zigzag {
  std::vector<std::string> nodes;
  std::vector<bool> forward;
};

inline std::string to_string(const Zigzag& z) {
  std::string s;
  for (std::size_t i = 0; i < z.nodes.size(); ++i) {
    if (i) s += z.forward[i - 1] ? " > " : " < ";
    s += z.nodes[i];
  }
  return s;
}

inline Zigzag reversed(const Zigzag& z) {
  Zigzag r;
  r.nodes.assign(z.nodes.rbegin(), z.nodes.rend());
  for (std::size_t i = z.forward.size(); i-- > 0;)
    r.forward.push_back(!z.forward[i]);
  return r;
}

class RigidGraph {
 public:
  std::size_t add_node(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty node name");
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    index_.emplace(name, nodes_.size());
    nodes_.push_back(name);
    return nodes_.size() - 1;
  }

  void add_edge(LocEdge e) {
    if (e.from == e.to) throw std::invalid_argument("self loop: " + e.from);
    if (find_edge(e.from, e.to) || find_edge(e.to, e.from))
      throw std::invalid_argument("duplicate edge: " + e.from + " > " + e.to);
    add_node(e.from);
    add_node(e.to);
    edges_.push_back(std::move(e));
  }

  // A verified edge must be backed by a localization verdict for the pair.
  void add_verified(const Verdict& v) {
    if (v.value != VerdictValue::Localization)
      throw std::invalid_argument(
          "verdict for " + v.report.sub + " > " + v.report.sup + " is " +
          to_string(v.value) + ", not Localization");
    add_edge({v.report.sub, v.report.sup, EdgeStatus::verified,
              std::string("engine:") + to_string(v.report.route)});
  }

  // Named walks must follow existing edges in the stated directions.
  void add_zigzag(Zigzag z) {
    if (z.nodes.size() < 2 || z.forward.size() + 1 != z.nodes.size())
      throw std::invalid_argument("malformed zigzag");
    for (std::size_t i = 0; i + 1 < z.nodes.size(); ++i) {
      const std::string& a = z.nodes[i];
      const std::string& b = z.nodes[i + 1];
      const LocEdge* e = z.forward[i] ? find_edge(a, b) : find_edge(b, a);
      if (!e)
        throw std::invalid_argument("zigzag step has no edge: " + a +
                                    (z.forward[i] ? " > " : " < ") + b);
    }
    for (const Zigzag& old : zigzags_)
      if (old.nodes.front() == z.nodes.front() &&
          old.nodes.back() == z.nodes.back())
        throw std::invalid_argument("duplicate zigzag for " + z.nodes.front() +
                                    " and " + z.nodes.back());
    zigzags_.push_back(std::move(z));
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<LocEdge>& edges() const { return edges_; }
  const std::vector<Zigzag>& zigzags() const { return zigzags_; }

  bool has_node(const std::string& name) const { return index_.count(name); }

  const LocEdge* find_edge(const std::string& from,
                           const std::string& to) const {
    for (const LocEdge& e : edges_)
      if (e.from == from && e.to == to) return &e;
    return nullptr;
  }

  // Connected components of the undirected edge set, each sorted by name,
  // largest first (ties by least member). Isolated nodes appear as
  // singletons; with verified_only set, asserted edges are ignored.
  std::vector<std::vector<std::string>> components(
      bool verified_only = false) const {
    std::vector<std::size_t> parent(nodes_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const LocEdge& e : edges_) {
      if (verified_only && e.status != EdgeStatus::verified) continue;
      parent[find(index_.at(e.from))] = find(index_.at(e.to));
    }
    std::unordered_map<std::size_t, std::vector<std::string>> buckets;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      buckets[find(i)].push_back(nodes_[i]);
    std::vector<std::vector<std::string>> out;
    out.reserve(buckets.size());
    for (auto& [root, members] : buckets) {
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.front() < b.front();
    });
    return out;
  }

  std::vector<std::string> component_of(const std::string& name) const {
    require_node(name);
    for (auto& comp : components())
      if (std::find(comp.begin(), comp.end(), name) != comp.end()) return comp;
    throw std::logic_error("node missing from its own component: " + name);
  }

  // Walk between two groups: a named zigzag when one is recorded for the
  // pair (either orientation), otherwise a breadth-first shortest walk.
  // nullopt when the groups lie in different components.
  std::optional<Zigzag> path(const std::string& from,
                             const std::string& to) const {
    require_node(from);
    require_node(to);
    if (from == to) return Zigzag{{from}, {}};
    for (const Zigzag& z : zigzags_) {
      if (z.nodes.front() == from && z.nodes.back() == to) return z;
      if (z.nodes.front() == to && z.nodes.back() == from)
        return reversed(z);
    }
    struct Arc {
      std::size_t nbr;
      bool forward;
    };
    std::vector<std::vector<Arc>> adj(nodes_.size());
    for (const LocEdge& e : edges_) {
      std::size_t a = index_.at(e.from), b = index_.at(e.to);
      adj[a].push_back({b, true});
      adj[b].push_back({a, false});
    }
    std::vector<std::size_t> prev(nodes_.size(), SIZE_MAX);
    std::vector<bool> prev_fwd(nodes_.size());
    std::size_t s = index_.at(from), t = index_.at(to);
    std::deque<std::size_t> queue{s};
    prev[s] = s;
    while (!queue.empty() && prev[t] == SIZE_MAX) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[u]) {
        if (prev[a.nbr] != SIZE_MAX) continue;
        prev[a.nbr] = u;
        prev_fwd[a.nbr] = a.forward;
        queue.push_back(a.nbr);
      }
    }
    if (prev[t] == SIZE_MAX) return std::nullopt;
    Zigzag z;
    for (std::size_t v = t; v != s; v = prev[v]) {
      z.nodes.push_back(nodes_[v]);
      z.forward.push_back(prev_fwd[v]);
    }
    z.nodes.push_back(nodes_[s]);
    std::reverse(z.nodes.begin(), z.nodes.end());
    std::reverse(z.forward.begin(), z.forward.end());
    return z;
  }

  // Graphviz form: verified edges solid, asserted dashed.
  std::string to_dot() const {
    std::string s = "digraph rigid {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (degree_of(i) == 0) s += "  \"" + nodes_[i] + "\";\n";
    for (const LocEdge& e : edges_) {
      s += "  \"" + e.from + "\" -> \"" + e.to + "\" [style=" +
           (e.status == EdgeStatus::verified ? "solid" : "dashed") + "];\n";
    }
    s += "}\n";
    return s;
  }

 private:
  void require_node(const std::string& name) const {
    if (!index_.count(name))
      throw std::invalid_argument("no such node: " + name);
  }

  std::size_t degree_of(std::size_t i) const {
    const std::string& n = nodes_[i];
    std::size_t d = 0;
    for (const LocEdge& e : edges_)
      if (e.from == n || e.to == n) ++d;
    return d;
  }

  std::vector<std::string> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<LocEdge> edges_;
  std::vector<Zigzag> zigzags_;
};

inline RigidGraph parse_graph_stream(std::istream& in) {
  RigidGraph g;
  std::string line;
  std::size_t ln = 0;
  auto fail = [&ln](const std::string& msg) {
    throw std::invalid_argument("graph line " + std::to_string(ln) + ": " +
                                msg);
  };
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() != 2) fail("want: node <name>");
      g.add_node(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) fail("want: edge <from> <to> <status> <source>");
      EdgeStatus st;
      if (tok[3] == "verified")
        st = EdgeStatus::verified;
      else if (tok[3] == "asserted")
        st = EdgeStatus::asserted;
      else
        fail("unknown status: " + tok[3]);
      try {
        g.add_edge({tok[1], tok[2], st, tok[4]});
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (tok[0] == "zigzag") {
      if (tok.size() < 4 || tok.size() % 2 != 0)
        fail("want: zigzag <a> >|< <b> ...");
      Zigzag z;
      z.nodes.push_back(tok[1]);
      for (std::size_t i = 2; i + 1 < tok.size(); i += 2) {
        if (tok[i] != ">" && tok[i] != "<") fail("bad direction: " + tok[i]);
        z.forward.push_back(tok[i] == ">");
        z.nodes.push_back(tok[i + 1]);
      }
      try {
        g.add_zigzag(std::move(z));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else {
      fail("unknown directive: " + tok[0]);
    }
  }
  return g;
}

inline RigidGraph parse_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_graph_stream(is);
}

inline RigidGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_graph_stream(f);
}

// Canonical text form; parsing it back yields the same graph, and
// serializing again reproduces the same bytes.
inline std::string serialize_graph(const RigidGraph& g) {
  std::string s;
  for (const std::string& n : g.nodes()) {
    bool isolated = true;
    for (const LocEdge& e : g.edges())
      if (e.from == n || e.to == n) {
        isolated = false;
        break;
      }
    if (isolated) s += "node " + n + "\n";
  }
  for (const LocEdge& e : g.edges())
    s += "edge " + e.from + " " + e.to + " " + to_string(e.status) + " " +
         e.source + "\n";
  for (const Zigzag& z : g.zigzags()) s += "zigzag " + to_string(z) + "\n";
  return s;
}

inline const RigidGraph& bundled_graph() {
  static const RigidGraph g = parse_graph(kRigidData);
  return g;
}

}  // namespace gloc
