#include "monideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "json.hpp"

namespace monideal {

namespace {

constexpr std::size_t kMaxVertices = 64;

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

std::string edge_name(std::size_t u, std::size_t v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

// Counts simple cycles through `start` using only vertices > start, each
// traversal direction once; the caller halves the total.
void odd_cycles_from(const SimpleGraph& G, VertexSet allowed, std::size_t start,
                     std::size_t at, VertexSet visited, std::size_t length,
                     std::size_t& count) {
  VertexSet next = G.neighbors(at) & allowed;
  while (next != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(next));
    next &= next - 1;
    if (v == start) {
      if (length >= 3 && length % 2 == 1) ++count;
      continue;
    }
    if (v < start || (visited & bit(v)) != 0) continue;
    odd_cycles_from(G, allowed, start, v, visited | bit(v), length + 1, count);
  }
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n) {
  if (n == 0 || n > kMaxVertices) {
    throw InvalidArgument("graphs need between 1 and 64 vertices");
  }
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw InvalidArgument("edge " + edge_name(u, v) + " leaves the vertex range");
  }
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u + 1));
  if (adjacent(u, v)) throw InvalidArgument("repeated edge " + edge_name(u, v));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

std::size_t SimpleGraph::degree(std::size_t v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adj_[v]));
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

std::vector<SimpleGraph::Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v = u + 1; v < adj_.size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph complete_bipartite(std::size_t r, std::size_t s) {
  if (r < 1 || s < 1) throw InvalidArgument("K_{r,s} needs r, s >= 1");
  SimpleGraph G(r + s);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = r; j < r + s; ++j) G.add_edge(i, j);
  }
  return G;
}

SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("C_n needs n >= 3");
  SimpleGraph G(n);
  for (std::size_t i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
  return G;
}

SimpleGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, "graph JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError(1, 1, "graph JSON needs an object with unsigned \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  SimpleGraph G(n);
  if (!doc.contains("edges")) return G;
  if (!doc["edges"].is_array()) throw ParseError(1, 1, "\"edges\" must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw ParseError(1, 1, "each edge must be a pair of 1-based vertices");
    }
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u == 0 || v == 0) throw ParseError(1, 1, "vertices are numbered from 1");
    G.add_edge(u - 1, v - 1);
  }
  return G;
}

std::string graph_to_json(const SimpleGraph& G) {
  nlohmann::json doc;
  doc["n"] = G.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : G.edges()) doc["edges"].push_back({u + 1, v + 1});
  return doc.dump();
}

std::size_t count_odd_cycles(const SimpleGraph& G, VertexSet vertices) {
  std::size_t count = 0;
  VertexSet rest = vertices;
  while (rest != 0) {
    const auto s = static_cast<std::size_t>(std::countr_zero(rest));
    rest &= rest - 1;
    odd_cycles_from(G, vertices, s, s, bit(s), 1, count);
  }
  return count / 2;
}

namespace {

std::vector<std::size_t> normalized_radial(const HWheelSpec& spec) {
  std::vector<std::size_t> r = spec.radial;
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end()) {
    throw InvalidArgument("radial vertices repeat");
  }
  for (auto i : r) {
    if (i < 1 || i > spec.rim_length) {
      throw InvalidArgument("radial index " + std::to_string(i) + " is not a rim vertex");
    }
  }
  return r;
}

}  // namespace

std::vector<std::size_t> radial_lengths(const HWheelSpec& spec) {
  const auto r = normalized_radial(spec);
  std::vector<std::size_t> out;
  if (r.empty()) return out;
  for (std::size_t j = 0; j + 1 < r.size(); ++j) out.push_back(r[j + 1] - r[j]);
  out.push_back(spec.rim_length - r.back() + r.front());
  return out;
}

bool has_three_consecutive_radial(const HWheelSpec& spec) {
  const auto r = normalized_radial(spec);
  const std::set<std::size_t> in(r.begin(), r.end());
  const std::size_t n = spec.rim_length;
  if (n < 3) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t b = i % n + 1, c = b % n + 1;
    if (in.contains(i) && in.contains(b) && in.contains(c)) return true;
  }
  return false;
}

SimpleGraph build_h_wheel_unchecked(const HWheelSpec& spec) {
  if (spec.h < 1) throw InvalidArgument("an h-wheel needs at least one center");
  if (spec.rim_length < 3) throw InvalidArgument("the rim needs at least 3 vertices");
  const auto r = normalized_radial(spec);
  const std::size_t rim = spec.rim_length;
  SimpleGraph G(rim + spec.h);
  for (std::size_t i = 0; i < rim; ++i) G.add_edge(i, (i + 1) % rim);
  for (std::size_t a = 0; a < spec.h; ++a) {
    for (std::size_t b = a + 1; b < spec.h; ++b) G.add_edge(rim + a, rim + b);
    for (auto i : r) G.add_edge(rim + a, i - 1);
  }
  return G;
}

std::vector<int> h_wheel_violations(const SimpleGraph& G, VertexSet rim, VertexSet centers) {
  std::vector<int> out;
  const auto members = [](VertexSet s) {
    std::vector<std::size_t> v;
    for (; s != 0; s &= s - 1) v.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    return v;
  };
  const auto cs = members(centers);
  const auto rs = members(rim);

  bool ok1 = !cs.empty() && (rim & centers) == 0;
  for (auto y : cs) ok1 = ok1 && (G.neighbors(y) & centers) == (centers & ~bit(y));
  if (!ok1) out.push_back(1);

  // Induced rim: 2-regular, connected, odd length.
  bool ok2 = rs.size() >= 3 && rs.size() % 2 == 1;
  for (auto x : rs) ok2 = ok2 && std::popcount(G.neighbors(x) & rim) == 2;
  if (ok2) {
    VertexSet seen = bit(rs.front()), frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (auto v : members(frontier)) next |= G.neighbors(v) & rim;
      frontier = next & ~seen;
      seen |= next;
    }
    ok2 = seen == rim;
  }
  if (!ok2) out.push_back(2);

  bool ok3 = !cs.empty();
  const VertexSet radial = cs.empty() ? 0 : G.neighbors(cs.front()) & rim;
  ok3 = ok3 && std::popcount(radial) >= 3;
  for (auto y : cs) ok3 = ok3 && (G.neighbors(y) & rim) == radial;
  if (!ok3) out.push_back(3);

  bool ok4 = !cs.empty();
  for (auto y : cs) {
    ok4 = ok4 && count_odd_cycles(G, bit(y) | (G.neighbors(y) & rim)) >= 2;
  }
  if (!ok4) out.push_back(4);
  return out;
}

SimpleGraph build_h_wheel(const HWheelSpec& spec) {
  SimpleGraph G = build_h_wheel_unchecked(spec);
  const std::size_t rim = spec.rim_length;
  const VertexSet rim_set = rim == kMaxVertices ? ~VertexSet{0} : bit(rim) - 1;
  const VertexSet all = G.vertex_count() == kMaxVertices ? ~VertexSet{0}
                                                         : bit(G.vertex_count()) - 1;
  const auto bad = h_wheel_violations(G, rim_set, all & ~rim_set);
  if (!bad.empty()) {
    std::string what = "not an h-wheel: condition";
    what += bad.size() > 1 ? "s" : "";
    for (std::size_t i = 0; i < bad.size(); ++i) {
      what += (i == 0 ? " (" : ", (") + std::to_string(bad[i]) + ")";
    }
    what += " violated";
    throw HWheelError(bad, what);
  }
  return G;
}

}  // namespace monideal
