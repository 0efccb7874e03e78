#include "relpoly/cutset.hpp"

#include <algorithm>
#include <string>

#include "relpoly/errors.hpp"

namespace relpoly::cutset {
namespace {

std::vector<PreciseReal> resolve_probes(std::size_t order, const std::optional<std::vector<double>>& probes) {
    if (!probes) return default_probes(order);
    if (probes->size() != order + 1) {
        throw DomainError("expected " + std::to_string(order + 1) + " probes, got " + std::to_string(probes->size()));
    }
    std::vector<double> sorted = *probes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i] > 0.0 && sorted[i] < 1.0)) throw DomainError("probes must lie strictly inside (0, 1)");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw DomainError("probes must be distinct");
    }
    return {probes->begin(), probes->end()};
}

ProbeSystem assemble(std::size_t order, std::vector<PreciseReal> probes) {
    ProbeSystem sys;
    sys.order = order;
    sys.matrix.assign(order + 1, std::vector<PreciseReal>(order + 1));
    for (std::size_t i = 0; i <= order; ++i) {
        const PreciseReal& p = probes[i];
        const PreciseReal q = 1 - p;
        for (std::size_t j = 0; j <= order; ++j) {
            sys.matrix[i][j] = pow(q, static_cast<long>(j)) * pow(p, static_cast<long>(order - j));
        }
    }
    sys.probes = std::move(probes);
    return sys;
}

}  // namespace

std::vector<PreciseReal> default_probes(std::size_t order) {
    std::vector<PreciseReal> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) out[i] = PreciseReal(i + 1) / PreciseReal(order + 2);
    return out;
}

ProbeSystem build_probe_system(std::size_t order, const CurveSource& source,
                               const std::optional<std::vector<double>>& probes) {
    auto sys = assemble(order, resolve_probes(order, probes));
    sys.rhs.reserve(order + 1);
    for (const auto& p : sys.probes) sys.rhs.push_back(1 - PreciseReal(source(p.convert_to<double>())));
    return sys;
}

ProbeSystem build_probe_system_precise(std::size_t order, const PreciseCurveSource& source,
                                       const std::optional<std::vector<double>>& probes) {
    auto sys = assemble(order, resolve_probes(order, probes));
    sys.rhs.reserve(order + 1);
    for (const auto& p : sys.probes) sys.rhs.push_back(1 - source(p));
    return sys;
}

CutRecovery recover_cut_counts(const ProbeSystem& system, RecoveryOptions options) {
    const std::size_t n = system.order;
    if (n > options.cap) {
        throw CapacityError("cut-set recovery of order " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(options.cap));
    }
    const std::size_t dim = n + 1;
    if (system.matrix.size() != dim || system.rhs.size() != dim) throw DomainError("malformed probe system");

    // Gaussian elimination with partial pivoting on an augmented copy.
    std::vector<std::vector<PreciseReal>> a = system.matrix;
    for (std::size_t i = 0; i < dim; ++i) a[i].push_back(system.rhs[i]);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0) throw DomainError("probe matrix is singular");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = col + 1; r < dim; ++r) {
            const PreciseReal factor = a[r][col] / a[col][col];
            if (factor == 0) continue;
            for (std::size_t c = col; c <= dim; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<PreciseReal> x(dim);
    for (std::size_t i = dim; i-- > 0;) {
        PreciseReal sum = a[i][dim];
        for (std::size_t c = i + 1; c < dim; ++c) sum -= a[i][c] * x[c];
        x[i] = sum / a[i][i];
    }

    CutRecovery out;
    PreciseReal residual = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        PreciseReal row = -system.rhs[i];
        for (std::size_t j = 0; j < dim; ++j) row += system.matrix[i][j] * x[j];
        residual = std::max<PreciseReal>(residual, abs(row));
    }
    out.residual = residual.convert_to<double>();
    if (out.residual > kResidualWarning) {
        out.warnings.push_back("residual " + std::to_string(out.residual) + " exceeds " +
                               std::to_string(kResidualWarning) + "; the system is ill-conditioned");
    }

    out.counts.reserve(dim);
    for (const auto& v : x) out.counts.push_back(v.convert_to<double>());
    for (const auto& p : system.probes) out.probes.push_back(p.convert_to<double>());

    if (options.round) {
        out.rounded = true;
        PreciseReal worst = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            const PreciseReal nearest = round(x[j]);
            worst = std::max<PreciseReal>(worst, abs(x[j] - nearest));
            out.rounded_counts.push_back(nearest.convert_to<BigInt>());
        }
        out.max_rounding_deviation = worst.convert_to<double>();
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& c = out.rounded_counts[j];
            if (c < 0 || c > binomial(n, j)) {
                out.warnings.push_back("C_" + std::to_string(j) + " = " + c.str() + " outside [0, C(" +
                                       std::to_string(n) + "," + std::to_string(j) + ")]");
            }
        }
        if (options.node_variant && out.rounded_counts.back() != 1) {
            out.warnings.push_back("C_" + std::to_string(n) + " = " + out.rounded_counts.back().str() +
                                   ", expected 1");
        }
    }
    return out;
}

}  // namespace relpoly::cutset
