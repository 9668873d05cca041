#include "buildsim/process_state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace buildsim {

PhiTable::PhiTable(std::uint32_t cap)
    : cap_(cap), counts_(static_cast<std::size_t>(cap + 1) * (cap + 1), 0) {
  if (cap < 1) throw std::invalid_argument("phi cap must be >= 1");
}

void PhiTable::add(std::uint32_t r, std::uint32_t s) {
  ++total_;
  if (r > cap_) {
    ++overflow_;
    return;
  }
  ++counts_[index(r, s)];
}

std::uint64_t PhiTable::at(std::uint32_t r, std::uint32_t s) const {
  if (s < 1 || s > r || r > cap_) {
    throw std::out_of_range("phi cell (" + std::to_string(r) + ", " +
                            std::to_string(s) + ") outside 1 <= s <= r <= cap");
  }
  return counts_[index(r, s)];
}

UnionFind::UnionFind(std::uint32_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex UnionFind::find(Vertex v) noexcept {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool UnionFind::unite(Vertex a, Vertex b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

ProcessState::ProcessState(std::uint32_t n, std::uint32_t phi_cap, bool checked)
    : n_(n),
      checked_(checked),
      exposed_deg_(n, 0),
      builder_deg_(n, 0),
      degree_histogram_(n, 0),
      uf_(n),
      phi_(phi_cap) {
  if (n < 2) throw std::invalid_argument("process needs n >= 2");
  degree_histogram_[0] = n;
}

EndpointView ProcessState::view(const Edge& e) const noexcept {
  return {exposed_deg_[e.u], exposed_deg_[e.v], builder_deg_[e.u],
          builder_deg_[e.v]};
}

StepRecord ProcessState::expose(const Edge& e) {
  if (checked_) {
    if (e.u >= e.v || e.v >= n_) {
      throw std::logic_error("expose: edge not canonical or out of range");
    }
    if (!seen_.insert(edge_key(e, n_))) {
      throw std::logic_error("expose: edge (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ") already exposed");
    }
  }
  StepRecord rec;
  rec.before = view(e);
  for (Vertex x : {e.u, e.v}) {
    const std::uint32_t d = exposed_deg_[x]++;
    --degree_histogram_[d];
    ++degree_histogram_[d + 1];
  }
  while (min_exposed_ + 1 < n_ && degree_histogram_[min_exposed_] == 0)
    ++min_exposed_;
  ++step_;
  const std::uint32_t du = exposed_deg_[e.u];
  const std::uint32_t dv = exposed_deg_[e.v];
  rec.r = std::max(du, dv);
  rec.s = std::min(du, dv);
  phi_.add(rec.r, rec.s);
  uf_.unite(e.u, e.v);
  rec.components = uf_.components();
  if (checked_) verify();
  return rec;
}

void ProcessState::purchase(const Edge& e) {
  ++builder_deg_[e.u];
  ++builder_deg_[e.v];
  builder_edges_.push_back(e);
  if (checked_) {
    if (!seen_.contains(edge_key(e, n_))) {
      throw std::logic_error("purchase: edge was never exposed");
    }
    verify();
  }
}

std::uint64_t ProcessState::low_exposed_count(std::uint32_t k) const noexcept {
  std::uint64_t total = 0;
  for (std::uint32_t d = min_exposed_; d < k && d < n_; ++d)
    total += degree_histogram_[d];
  return total;
}

void ProcessState::verify() const {
  std::uint64_t exposed_sum = 0;
  std::uint64_t builder_sum = 0;
  std::vector<std::uint64_t> histogram(n_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    if (builder_deg_[v] > exposed_deg_[v]) {
      throw std::logic_error("builder degree exceeds exposed degree at vertex " +
                             std::to_string(v));
    }
    exposed_sum += exposed_deg_[v];
    builder_sum += builder_deg_[v];
    ++histogram[exposed_deg_[v]];
  }
  if (exposed_sum != 2 * step_)
    throw std::logic_error("exposed degree sum != 2 * step");
  if (builder_sum != 2 * builder_edges_.size())
    throw std::logic_error("builder degree sum != 2 * |builder edges|");
  if (histogram != degree_histogram_)
    throw std::logic_error("degree histogram out of sync");
  const auto true_min = *std::min_element(exposed_deg_.begin(), exposed_deg_.end());
  if (true_min != min_exposed_)
    throw std::logic_error("minimum exposed degree out of sync");
  if (phi_.total() != step_)
    throw std::logic_error("phi table total != step");
}

bool hitting_reached(const ProcessState& state, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("hitting_reached: k must be >= 1");
  if (k >= state.n()) {
    throw std::invalid_argument("hitting_reached: k must be < n");
  }
  return state.min_exposed_degree() >= k;
}

bool connectivity_hitting(const ProcessState& state) noexcept {
  return state.component_count() == 1;
}

}  // namespace buildsim
