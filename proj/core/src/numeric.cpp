#include "relpoly/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "relpoly/errors.hpp"

namespace relpoly {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

double log_binomial(std::size_t n, std::size_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    k = std::min(k, n - k);
    if (n <= 60) {
        // Exact in 64 bits: C(60,30) < 2^57.
        std::uint64_t r = 1;
        for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return std::log(static_cast<double>(r));
    }
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("ratio with zero denominator");
    const PreciseReal q = PreciseReal(num) / PreciseReal(den);
    return q.convert_to<double>();
}

double binomial_mixture(std::span<const double> weights, double x) {
    require_probability(x, "mixture argument");
    if (weights.empty()) return 0.0;
    const std::size_t n = weights.size() - 1;
    if (x == 0.0) return weights.front();
    if (x == 1.0) return weights.back();
    const double log_x = std::log(x);
    const double log_1mx = std::log1p(-x);
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (weights[k] <= 0.0) continue;
        const double lt = log_binomial(n, k) + std::log(weights[k]) + static_cast<double>(k) * log_x +
                          static_cast<double>(n - k) * log_1mx;
        sum += std::exp(lt);
    }
    return sum;
}

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(what) + " " + std::to_string(p) + " outside [0, 1]");
    }
}

}  // namespace relpoly
