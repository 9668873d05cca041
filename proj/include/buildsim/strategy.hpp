// Builder strategies and the X/Y/Z/U vertex bookkeeping.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "buildsim/edge.hpp"
#include "buildsim/process_state.hpp"

namespace buildsim {

enum class StrategyKind {
  kGreedyKnn,  // buy iff some end has Builder degree < k  (yields O_k)
  kBothEnds,   // buy iff both ends have Builder degree < k
  kAlgoDegK,   // two-phase strategy for minimum degree k >= 2
  kAlgoDeg1,   // two-phase strategy for minimum degree 1
  kBuyAll,
  kBuyNone,
};

std::string_view to_string(StrategyKind kind);
StrategyKind parse_strategy_kind(std::string_view name);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::kGreedyKnn;
  std::uint32_t k = 1;
  /// Phase one covers the first ceil(C * n) steps.
  double C = 1.0;
  double delta = 0.0;
  /// 0 means "derive from C" (sqrt(k / C), or C^{-1/2} for algo_deg_1).
  double epsilon = 0.0;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
  bool two_phase() const noexcept {
    return kind == StrategyKind::kAlgoDegK || kind == StrategyKind::kAlgoDeg1;
  }
  /// The epsilon tied to C (given explicitly or derived).
  double effective_epsilon() const;
  std::uint64_t phase_one_steps(std::uint32_t n) const;
  /// For algo_deg_k: whether epsilon < delta / (2k), the regime in which
  /// the budget guarantee is proved. Always true for other kinds.
  bool in_proven_regime() const;

  friend bool operator==(const StrategyConfig&, const StrategyConfig&) = default;
};

/// Membership of a vertex at step i:
///   X: Builder degree >= 1,
///   Y: isolated in B_i but not in G_{n,i},
///   Z: isolated in G_{n,i}.
enum class VertexClass : std::uint8_t { kX, kY, kZ };

enum class PurchaseTag : std::uint8_t { kNone, kEfficient, kInefficient, kPhaseTwo };

struct Decision {
  bool purchase = false;
  PurchaseTag tag = PurchaseTag::kNone;

  friend bool operator==(const Decision&, const Decision&) = default;
};

class StrategyState {
 public:
  StrategyState(std::uint32_t n, std::uint32_t k);

  VertexClass vertex_class(Vertex v) const noexcept { return class_[v]; }
  /// v is isolated in Builder's graph (v in Y or Z).
  bool builder_isolated(Vertex v) const noexcept {
    return class_[v] != VertexClass::kX;
  }

  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t x_size() const noexcept { return x_size_; }
  std::uint64_t y_size() const noexcept { return y_size_; }
  std::uint64_t z_size() const noexcept { return z_size_; }
  /// |U|: vertices with Builder degree <= k - 1.
  std::uint64_t u_size() const noexcept { return u_size_; }
  std::uint64_t purchase_count() const noexcept { return purchases_; }
  std::uint64_t efficient_count() const noexcept { return efficient_; }
  std::uint64_t inefficient_count() const noexcept { return inefficient_; }

  /// Applies one exposed edge. `before` holds the endpoints' degrees prior to
  /// this step. Throws std::logic_error if the sets are inconsistent with the
  /// supplied Builder degrees or the monotone containments break.
  void update(const Edge& e, const Decision& decision, const EndpointView& before);

 private:
  void move(Vertex v, VertexClass to) noexcept;

  std::uint32_t k_;
  std::vector<VertexClass> class_;
  std::uint64_t x_size_ = 0;
  std::uint64_t y_size_ = 0;
  std::uint64_t z_size_;
  std::uint64_t u_size_;
  std::uint64_t purchases_ = 0;
  std::uint64_t efficient_ = 0;
  std::uint64_t inefficient_ = 0;
};

/// Pure purchase decision for the step-th edge (1-based), given pre-exposure
/// endpoint degrees. Never mutates state.
Decision decide(const StrategyConfig& config, const StrategyState& state,
                std::uint32_t n, std::uint64_t step, const Edge& e,
                const EndpointView& before);

Decision algo_deg_k_decide(std::uint32_t k, std::uint64_t phase_one_steps,
                           std::uint64_t step, const EndpointView& before);

Decision algo_deg_1_decide(const StrategyState& state,
                           std::uint64_t phase_one_steps, std::uint64_t step,
                           const Edge& e);

/// Free-function form of StrategyState::update.
void update_sets(StrategyState& state, const Edge& e, const Decision& decision,
                 const EndpointView& before);

}  // namespace buildsim
