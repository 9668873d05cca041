// Closed-form constants of the k-nearest-neighbour graph and
// the degree-pair edge classification, in exact arithmetic where possible.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "buildsim/edge.hpp"

namespace buildsim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint32_t a, std::uint32_t b);

/// f(k) = f(k-1) + 2 - C(2k,k) 4^{-k}, f(0) = 1.
Rational f_recurrence(std::uint32_t k);
/// f(k) = sum_{i,j=0}^{k} C(i+j, i) 2^{-i-j}.
Rational f_double_sum(std::uint32_t k);
/// Recurrence value, checked against the double sum (std::logic_error).
Rational f(std::uint32_t k);

/// o_k = k/2 + (1/4) sum_{i=0}^{k-1} C(2i,i) 4^{-i}.
Rational o_k_closed(std::uint32_t k);
/// o_k = k - f(k-1)/4.
Rational o_k_via_f(std::uint32_t k);
/// Closed-form value, checked against k - f(k-1)/4. Requires k >= 1.
Rational o_k(std::uint32_t k);

/// Poisson-type mass C^d e^{-C} / d!, as a fraction of n.
double mu_d(double C, std::uint32_t d);

/// Density of the degree-pair class (r, s), r >= s >= 1:
///   2^{-[r=s]} C(r+s-1, s-1) 2^{-r-s+1}.
Rational mu_rs(std::uint32_t r, std::uint32_t s);

/// Simple graph on vertices [0, n).
struct SimpleGraph {
  std::uint32_t n = 0;
  std::vector<Edge> edges;

  std::vector<std::uint32_t> degrees() const;
};

/// E[phi(r, s)] over a uniformly random ordering of E(G):
///   2^{-[r=s]} sum over ordered adjacent (u, v) of
///   C(d_u-1, r-1) C(d_v-1, s-1) / ((d_u + d_v - 1) C(d_u+d_v-2, r+s-2)).
double expected_phi_given_graph(const SimpleGraph& g, std::uint32_t r,
                                std::uint32_t s);

/// (n/2)(ln n + (k-1) ln ln n).
double tau_estimate(double n, std::uint32_t k);

double to_double(const Rational& q);
/// "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& q);

/// Bundle of the exact constants, k = 1..k_max and 1 <= s <= r <= rs_max.
struct AnalyticTable {
  std::vector<Rational> o;    // o[k-1] = o_k
  std::vector<Rational> f;    // f[k] for k = 0..k_max
  std::vector<std::vector<Rational>> mu_rs;  // mu_rs[r-1][s-1]
};

AnalyticTable build_table(std::uint32_t k_max, std::uint32_t rs_max);

}  // namespace buildsim
