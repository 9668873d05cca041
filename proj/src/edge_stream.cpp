#include "buildsim/edge_stream.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace buildsim {

std::string_view to_string(StreamMode mode) {
  switch (mode) {
    case StreamMode::kFullPermutation: return "full";
    case StreamMode::kRejectionCoupled: return "rejection";
  }
  return "?";
}

StreamMode parse_stream_mode(std::string_view name) {
  if (name == "full") return StreamMode::kFullPermutation;
  if (name == "rejection") return StreamMode::kRejectionCoupled;
  throw std::invalid_argument("unknown stream mode '" + std::string(name) +
                              "' (expected full|rejection)");
}

namespace detail {

FlatKeySet::FlatKeySet(std::size_t expected) {
  std::size_t capacity = 16;
  while (capacity < 2 * expected) capacity <<= 1;
  slots_.assign(capacity, 0);
  mask_ = capacity - 1;
}

std::size_t FlatKeySet::slot(std::uint64_t key) const noexcept {
  return static_cast<std::size_t>(mix64(key)) & mask_;
}

bool FlatKeySet::insert(std::uint64_t key) {
  if (2 * (size_ + 1) > slots_.size()) grow();
  const std::uint64_t stored = key + 1;
  for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
    if (slots_[i] == stored) return false;
    if (slots_[i] == 0) {
      slots_[i] = stored;
      ++size_;
      return true;
    }
  }
}

bool FlatKeySet::contains(std::uint64_t key) const {
  const std::uint64_t stored = key + 1;
  for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
    if (slots_[i] == stored) return true;
    if (slots_[i] == 0) return false;
  }
}

void FlatKeySet::grow() {
  std::vector<std::uint64_t> old;
  old.swap(slots_);
  slots_.assign(old.size() * 2, 0);
  mask_ = slots_.size() - 1;
  for (std::uint64_t stored : old) {
    if (stored == 0) continue;
    std::size_t i = slot(stored - 1);
    while (slots_[i] != 0) i = (i + 1) & mask_;
    slots_[i] = stored;
  }
}

}  // namespace detail

EdgeStream::EdgeStream(std::uint32_t n, std::uint64_t seed, StreamMode mode,
                       std::size_t expected_edges)
    : n_(n),
      mode_(mode),
      rng_(seed),
      total_(complete_edge_count(n)),
      exposed_(mode == StreamMode::kRejectionCoupled ? expected_edges : 0) {
  if (n < 2) throw std::invalid_argument("edge stream needs n >= 2");
  if (mode == StreamMode::kFullPermutation) {
    if (n > kFullPermutationMaxN) {
      throw std::invalid_argument("full-permutation mode is limited to n <= " +
                                  std::to_string(kFullPermutationMaxN));
    }
    pool_.reserve(total_);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pool_.push_back({u, v});
  }
}

Edge EdgeStream::draw_pair() {
  const auto a = static_cast<Vertex>(rng_.below(n_));
  auto b = static_cast<Vertex>(rng_.below(n_ - 1));
  if (b >= a) ++b;
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::optional<Edge> EdgeStream::next() {
  if (exhausted()) return std::nullopt;
  if (mode_ == StreamMode::kFullPermutation) {
    const std::uint64_t j = emitted_ + rng_.below(total_ - emitted_);
    std::swap(pool_[emitted_], pool_[j]);
    ++draws_;
    return pool_[emitted_++];
  }
  for (;;) {
    const Edge e = draw_pair();
    ++draws_;
    if (exposed_.insert(edge_key(e, n_))) {
      ++emitted_;
      return e;
    }
  }
}

EdgeStream new_stream(std::uint32_t n, std::uint64_t seed, StreamMode mode) {
  return EdgeStream(n, seed, mode);
}

}  // namespace buildsim
