#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace relpoly {

using BigInt = boost::multiprecision::cpp_int;

/// 50 significant decimal digits; comfortably above quadruple precision.
using PreciseReal = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(std::size_t n, std::size_t k);

double log_binomial(std::size_t n, std::size_t k);

/// num / den rounded to double without overflowing either operand.
double ratio_to_double(const BigInt& num, const BigInt& den);

/// Bernstein mixture sum_k C(n,k) w_k x^k (1-x)^(n-k) with n = weights.size()-1,
/// summed from log-space terms. Weights are expected in [0, 1].
double binomial_mixture(std::span<const double> weights, double x);

/// Throws DomainError unless 0 <= p <= 1.
void require_probability(double p, const char* what = "probability");

inline double clamp_unit(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace relpoly
