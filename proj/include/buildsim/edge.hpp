#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace buildsim {

using Vertex = std::uint32_t;

/// Undirected edge of K_n in canonical order (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical edge {a, b}. Throws on a loop.
constexpr Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Number of edges of K_n.
constexpr std::uint64_t complete_edge_count(std::uint64_t n) noexcept {
  return n * (n - 1) / 2;
}

/// Dense key of a canonical edge, unique for a fixed n.
constexpr std::uint64_t edge_key(const Edge& e, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(e.u) * n + e.v;
}

}  // namespace buildsim
