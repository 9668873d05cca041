#include "buildsim/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace buildsim {

namespace {

constexpr std::pair<StrategyKind, std::string_view> kKindNames[] = {
    {StrategyKind::kGreedyKnn, "greedy_knn"}, {StrategyKind::kBothEnds, "both_ends"},
    {StrategyKind::kAlgoDegK, "algo_deg_k"},  {StrategyKind::kAlgoDeg1, "algo_deg_1"},
    {StrategyKind::kBuyAll, "buy_all"},       {StrategyKind::kBuyNone, "buy_none"},
};

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument("strategy config: " + what);
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  invalid("unknown strategy '" + std::string(name) + "'");
}

double StrategyConfig::effective_epsilon() const {
  if (epsilon > 0) return epsilon;
  if (kind == StrategyKind::kAlgoDeg1) return 1.0 / std::sqrt(C);
  return std::sqrt(static_cast<double>(k) / C);
}

std::uint64_t StrategyConfig::phase_one_steps(std::uint32_t n) const {
  return static_cast<std::uint64_t>(std::ceil(C * static_cast<double>(n)));
}

bool StrategyConfig::in_proven_regime() const {
  if (kind != StrategyKind::kAlgoDegK) return true;
  return effective_epsilon() < delta / (2.0 * k);
}

void StrategyConfig::validate() const {
  if (k < 1) invalid("k >= 1 violated");
  if (!(C > 0) || !std::isfinite(C)) invalid("C > 0 violated");
  if (epsilon < 0) invalid("epsilon must be positive when given");
  switch (kind) {
    case StrategyKind::kAlgoDegK: {
      if (k < 2) invalid("algo_deg_k requires k >= 2 (use algo_deg_1 for k = 1)");
      if (!(delta > 0)) invalid("algo_deg_k requires delta > 0");
      if (epsilon > 0 && std::abs(C * epsilon * epsilon - k) > 1e-9 * k) {
        invalid("algo_deg_k requires C = k * epsilon^-2");
      }
      break;
    }
    case StrategyKind::kAlgoDeg1: {
      if (k != 1) invalid("algo_deg_1 requires k = 1");
      const double eps = effective_epsilon();
      if (epsilon > 0 && std::abs(epsilon - 1.0 / std::sqrt(C)) > 1e-9) {
        invalid("algo_deg_1 requires epsilon = C^{-1/2}");
      }
      if (!(eps < 0.75)) invalid("algo_deg_1 requires epsilon = C^{-1/2} < 3/4");
      break;
    }
    case StrategyKind::kBothEnds:
      if (epsilon > 0 && std::abs(C * epsilon * epsilon - k) > 1e-9 * k) {
        invalid("both_ends requires C = k * epsilon^-2 when epsilon is given");
      }
      break;
    default:
      break;
  }
}

StrategyState::StrategyState(std::uint32_t n, std::uint32_t k)
    : k_(k), class_(n, VertexClass::kZ), z_size_(n), u_size_(n) {
  if (k < 1) throw std::invalid_argument("strategy state needs k >= 1");
}

void StrategyState::move(Vertex v, VertexClass to) noexcept {
  auto& c = class_[v];
  if (c == to) return;
  (c == VertexClass::kX ? x_size_ : c == VertexClass::kY ? y_size_ : z_size_)--;
  (to == VertexClass::kX ? x_size_ : to == VertexClass::kY ? y_size_ : z_size_)++;
  c = to;
}

void StrategyState::update(const Edge& e, const Decision& decision,
                           const EndpointView& before) {
  const std::uint32_t bdeg[2] = {before.builder_u, before.builder_v};
  const std::uint32_t gdeg[2] = {before.exposed_u, before.exposed_v};
  const Vertex ends[2] = {e.u, e.v};
  for (int i = 0; i < 2; ++i) {
    const VertexClass c = class_[ends[i]];
    const bool ok = c == VertexClass::kX   ? bdeg[i] >= 1
                    : c == VertexClass::kY ? bdeg[i] == 0 && gdeg[i] >= 1
                                           : bdeg[i] == 0 && gdeg[i] == 0;
    if (!ok) {
      throw std::logic_error("update_sets: vertex " + std::to_string(ends[i]) +
                             " class inconsistent with its degrees");
    }
  }
  const std::uint64_t yz_before = y_size_ + z_size_;
  const std::uint64_t z_before = z_size_;

  if (decision.purchase) {
    ++purchases_;
    if (decision.tag == PurchaseTag::kEfficient) ++efficient_;
    if (decision.tag == PurchaseTag::kInefficient) ++inefficient_;
    for (int i = 0; i < 2; ++i) {
      move(ends[i], VertexClass::kX);
      if (bdeg[i] + 1 == k_) --u_size_;
    }
  } else {
    for (Vertex v : ends)
      if (class_[v] != VertexClass::kX) move(v, VertexClass::kY);
  }

  if (z_size_ > z_before || y_size_ + z_size_ > yz_before) {
    throw std::logic_error("update_sets: monotone containment of Y u Z or Z broken");
  }
}

Decision algo_deg_k_decide(std::uint32_t k, std::uint64_t phase_one_steps,
                           std::uint64_t step, const EndpointView& b) {
  if (step <= phase_one_steps) {
    if (b.builder_u < k && b.builder_v < k) return {true, PurchaseTag::kEfficient};
    if (b.exposed_u == 0 || b.exposed_v == 0) return {true, PurchaseTag::kInefficient};
    return {};
  }
  if (b.builder_u < k || b.builder_v < k) return {true, PurchaseTag::kPhaseTwo};
  return {};
}

Decision algo_deg_1_decide(const StrategyState& state,
                           std::uint64_t phase_one_steps, std::uint64_t step,
                           const Edge& e) {
  const bool iu = state.builder_isolated(e.u);
  const bool iv = state.builder_isolated(e.v);
  if (step <= phase_one_steps) {
    if (iu && iv) return {true, PurchaseTag::kEfficient};
    return {};
  }
  if (iu || iv) return {true, PurchaseTag::kPhaseTwo};
  return {};
}

Decision decide(const StrategyConfig& config, const StrategyState& state,
                std::uint32_t n, std::uint64_t step, const Edge& e,
                const EndpointView& b) {
  const std::uint32_t k = config.k;
  switch (config.kind) {
    case StrategyKind::kGreedyKnn:
      return {b.builder_u < k || b.builder_v < k, PurchaseTag::kNone};
    case StrategyKind::kBothEnds:
      return {b.builder_u < k && b.builder_v < k, PurchaseTag::kNone};
    case StrategyKind::kAlgoDegK:
      return algo_deg_k_decide(k, config.phase_one_steps(n), step, b);
    case StrategyKind::kAlgoDeg1:
      return algo_deg_1_decide(state, config.phase_one_steps(n), step, e);
    case StrategyKind::kBuyAll:
      return {true, PurchaseTag::kNone};
    case StrategyKind::kBuyNone:
      return {};
  }
  return {};
}

void update_sets(StrategyState& state, const Edge& e, const Decision& decision,
                 const EndpointView& before) {
  state.update(e, decision, before);
}

}  // namespace buildsim
