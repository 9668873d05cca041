// Lazily generated uniform random permutation of E(K_n).
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "buildsim/edge.hpp"
#include "buildsim/rng.hpp"

namespace buildsim {

enum class StreamMode {
  /// In-place Fisher-Yates over all N edges, one swap per emitted edge.
  kFullPermutation,
  /// Uniform draws with repetition from E(K_n); repeats are skipped.
  kRejectionCoupled,
};

/// Largest n accepted by StreamMode::kFullPermutation.
inline constexpr std::uint32_t kFullPermutationMaxN = 2000;

std::string_view to_string(StreamMode mode);
StreamMode parse_stream_mode(std::string_view name);

namespace detail {

/// Open-addressing hash set of 64-bit keys with linear probing.
class FlatKeySet {
 public:
  explicit FlatKeySet(std::size_t expected = 0);

  /// Inserts key; returns false if it was already present.
  bool insert(std::uint64_t key);
  bool contains(std::uint64_t key) const;
  std::size_t size() const noexcept { return size_; }

 private:
  void grow();
  std::size_t slot(std::uint64_t key) const noexcept;

  std::vector<std::uint64_t> slots_;  // stores key + 1; 0 marks empty
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace detail

/// Emits the edges of K_n one at a time in uniformly random order.
///
/// Both modes produce a prefix distributed as the prefix of a uniform
/// permutation. The rejection-coupled mode stores only the emitted edges, so
/// memory is proportional to the prefix length rather than to N.
class EdgeStream {
 public:
  /// `expected_edges` presizes the rejection-mode membership set.
  EdgeStream(std::uint32_t n, std::uint64_t seed, StreamMode mode,
             std::size_t expected_edges = 0);

  /// Next not-yet-emitted edge, or nullopt once all N edges are out.
  std::optional<Edge> next();

  std::uint32_t n() const noexcept { return n_; }
  StreamMode mode() const noexcept { return mode_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  std::uint64_t total_edges() const noexcept { return total_; }
  bool exhausted() const noexcept { return emitted_ == total_; }

  /// Raw draws including repeats (rejection mode; equals emitted otherwise).
  std::uint64_t draws() const noexcept { return draws_; }
  std::uint64_t repeated_draws() const noexcept { return draws_ - emitted_; }

 private:
  Edge draw_pair();

  std::uint32_t n_;
  StreamMode mode_;
  Rng rng_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::uint64_t draws_ = 0;
  std::vector<Edge> pool_;        // full-permutation mode
  detail::FlatKeySet exposed_;    // rejection mode
};

/// Validating factory; equivalent to the constructor.
EdgeStream new_stream(std::uint32_t n, std::uint64_t seed, StreamMode mode);

}  // namespace buildsim
