#include "buildsim/analytics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace buildsim {

namespace {

Rational pow2_inverse(std::uint32_t e) {
  return Rational(BigInt(1), BigInt(1) << e);
}

double log_binomial(double a, double b) {
  return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
}

}  // namespace

BigInt binomial(std::uint32_t a, std::uint32_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::uint32_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Rational f_recurrence(std::uint32_t k) {
  Rational value = 1;
  for (std::uint32_t i = 1; i <= k; ++i)
    value += 2 - Rational(binomial(2 * i, i)) * pow2_inverse(2 * i);
  return value;
}

Rational f_double_sum(std::uint32_t k) {
  Rational value = 0;
  for (std::uint32_t i = 0; i <= k; ++i)
    for (std::uint32_t j = 0; j <= k; ++j)
      value += Rational(binomial(i + j, i)) * pow2_inverse(i + j);
  return value;
}

Rational f(std::uint32_t k) {
  Rational value = f_recurrence(k);
  if (value != f_double_sum(k))
    throw std::logic_error("f: recurrence and double sum disagree");
  return value;
}

Rational o_k_closed(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("o_k requires k >= 1");
  Rational sum = 0;
  for (std::uint32_t i = 0; i < k; ++i)
    sum += Rational(binomial(2 * i, i)) * pow2_inverse(2 * i);
  return Rational(k, 2) + sum / 4;
}

Rational o_k_via_f(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("o_k requires k >= 1");
  return Rational(k) - f_recurrence(k - 1) / 4;
}

Rational o_k(std::uint32_t k) {
  Rational value = o_k_closed(k);
  if (value != o_k_via_f(k))
    throw std::logic_error("o_k: closed sum and k - f(k-1)/4 disagree");
  return value;
}

double mu_d(double C, std::uint32_t d) {
  if (!(C > 0)) throw std::invalid_argument("mu_d requires C > 0");
  return std::exp(d * std::log(C) - C - std::lgamma(d + 1.0));
}

Rational mu_rs(std::uint32_t r, std::uint32_t s) {
  if (s < 1 || r < s) throw std::invalid_argument("mu_rs requires r >= s >= 1");
  Rational value = Rational(binomial(r + s - 1, s - 1)) * pow2_inverse(r + s - 1);
  if (r == s) value /= 2;
  return value;
}

std::vector<std::uint32_t> SimpleGraph::degrees() const {
  std::vector<std::uint32_t> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double expected_phi_given_graph(const SimpleGraph& g, std::uint32_t r,
                                std::uint32_t s) {
  if (s < 1 || r < s) {
    throw std::invalid_argument("expected_phi_given_graph requires r >= s >= 1");
  }
  const auto deg = g.degrees();
  auto ordered_term = [&](double du, double dv) {
    if (du < r || dv < s) return 0.0;  // C(a, b) = 0 for b > a
    const double log_ratio = log_binomial(du - 1, r - 1) +
                             log_binomial(dv - 1, s - 1) -
                             log_binomial(du + dv - 2, r + s - 2);
    return std::exp(log_ratio) / (du + dv - 1);
  };
  double total = 0;
  for (const Edge& e : g.edges) {
    const double du = deg[e.u];
    const double dv = deg[e.v];
    total += ordered_term(du, dv) + ordered_term(dv, du);
  }
  return r == s ? total / 2 : total;
}

double tau_estimate(double n, std::uint32_t k) {
  if (n < 3) throw std::invalid_argument("tau_estimate requires n >= 3");
  if (k < 1) throw std::invalid_argument("tau_estimate requires k >= 1");
  return n / 2 * (std::log(n) + (k - 1.0) * std::log(std::log(n)));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

AnalyticTable build_table(std::uint32_t k_max, std::uint32_t rs_max) {
  AnalyticTable table;
  for (std::uint32_t k = 0; k <= k_max; ++k) table.f.push_back(f(k));
  for (std::uint32_t k = 1; k <= k_max; ++k) table.o.push_back(o_k(k));
  for (std::uint32_t r = 1; r <= rs_max; ++r) {
    table.mu_rs.emplace_back();
    for (std::uint32_t s = 1; s <= r; ++s) table.mu_rs.back().push_back(mu_rs(r, s));
  }
  return table;
}

}  // namespace buildsim
