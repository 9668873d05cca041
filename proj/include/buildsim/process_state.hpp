// Exposed graph G_{n,i}, Builder graph B_i, and the
// per-step bookkeeping needed for hitting times and edge classification.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "buildsim/edge.hpp"
#include "buildsim/edge_stream.hpp"

namespace buildsim {

/// Counts of edges whose exposure raised one endpoint's degree to r and the
/// other's to s (r >= s >= 1). Cells with r > cap are pooled in overflow().
class PhiTable {
 public:
  static constexpr std::uint32_t kDefaultCap = 64;

  explicit PhiTable(std::uint32_t cap = kDefaultCap);

  void add(std::uint32_t r, std::uint32_t s);
  /// Count of cell (r, s); requires 1 <= s <= r <= cap.
  std::uint64_t at(std::uint32_t r, std::uint32_t s) const;
  std::uint64_t overflow() const noexcept { return overflow_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint32_t cap() const noexcept { return cap_; }

 private:
  std::size_t index(std::uint32_t r, std::uint32_t s) const noexcept {
    return static_cast<std::size_t>(r) * (cap_ + 1) + s;
  }

  std::uint32_t cap_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t overflow_ = 0;
  std::uint64_t total_ = 0;
};

/// Incremental union-find over vertices (union by size, path halving).
class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n);

  Vertex find(Vertex v) noexcept;
  /// Returns true if a and b were in different components.
  bool unite(Vertex a, Vertex b) noexcept;
  std::uint32_t components() const noexcept { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t components_;
};

/// Degrees of both endpoints of an edge, taken before it is exposed.
struct EndpointView {
  std::uint32_t exposed_u = 0;
  std::uint32_t exposed_v = 0;
  std::uint32_t builder_u = 0;
  std::uint32_t builder_v = 0;
};

/// Outcome of exposing one edge.
struct StepRecord {
  std::uint32_t r = 0;  // larger post-exposure endpoint degree
  std::uint32_t s = 0;  // smaller post-exposure endpoint degree
  std::uint32_t components = 0;
  EndpointView before;
};

class ProcessState {
 public:
  /// With `checked`, every mutation is followed by a full consistency recount
  /// and duplicate exposures are detected; intended for tests.
  explicit ProcessState(std::uint32_t n,
                        std::uint32_t phi_cap = PhiTable::kDefaultCap,
                        bool checked = false);

  /// Pre-exposure degrees of the endpoints of e.
  EndpointView view(const Edge& e) const noexcept;

  /// Reveals e as the next edge of the process. Exposing an edge twice is a
  /// contract violation (std::logic_error when checked, undefined otherwise).
  StepRecord expose(const Edge& e);

  /// Adds an already exposed edge to Builder's graph.
  void purchase(const Edge& e);

  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t step() const noexcept { return step_; }
  std::span<const std::uint32_t> exposed_degrees() const noexcept {
    return exposed_deg_;
  }
  std::span<const std::uint32_t> builder_degrees() const noexcept {
    return builder_deg_;
  }
  std::span<const Edge> builder_edges() const noexcept { return builder_edges_; }

  /// Number of vertices with exposed degree < k.
  std::uint64_t low_exposed_count(std::uint32_t k) const noexcept;
  std::uint32_t min_exposed_degree() const noexcept { return min_exposed_; }
  /// Exposed components, isolated vertices included.
  std::uint32_t component_count() const noexcept { return uf_.components(); }
  const PhiTable& phi() const noexcept { return phi_; }

  /// Full recount of every derived quantity; throws std::logic_error.
  void verify() const;

 private:
  std::uint32_t n_;
  bool checked_;
  std::uint64_t step_ = 0;
  std::vector<std::uint32_t> exposed_deg_;
  std::vector<std::uint32_t> builder_deg_;
  std::vector<Edge> builder_edges_;
  std::vector<std::uint64_t> degree_histogram_;  // vertices per exposed degree
  std::uint32_t min_exposed_ = 0;
  UnionFind uf_;
  PhiTable phi_;
  detail::FlatKeySet seen_;  // checked mode only
};

/// True iff the exposed graph has minimum degree >= k. Requires 1 <= k < n.
bool hitting_reached(const ProcessState& state, std::uint32_t k);

/// True iff the exposed graph is connected.
bool connectivity_hitting(const ProcessState& state) noexcept;

}  // namespace buildsim
