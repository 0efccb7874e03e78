#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relpoly/numeric.hpp"

namespace relpoly::cutset {

/// Largest order accepted by the solver; the probe matrix becomes severely
/// ill-conditioned beyond it.
inline constexpr std::size_t kDefaultCap = 30;

/// Square system P C = 1 - R(p_i) for the cut counts C_0..C_n of a
/// reliability polynomial of order n, with P[i][j] = (1-p_i)^j p_i^(n-j).
struct ProbeSystem {
    std::size_t order = 0;
    std::vector<PreciseReal> probes;
    std::vector<std::vector<PreciseReal>> matrix;
    std::vector<PreciseReal> rhs;
};

using CurveSource = std::function<double(double)>;
using PreciseCurveSource = std::function<PreciseReal(const PreciseReal&)>;

/// p_i = (i+1)/(n+2), i = 0..n.
std::vector<PreciseReal> default_probes(std::size_t order);

/// `probes`, when given, must hold n+1 distinct values strictly inside (0,1).
ProbeSystem build_probe_system(std::size_t order, const CurveSource& source,
                               const std::optional<std::vector<double>>& probes = std::nullopt);
ProbeSystem build_probe_system_precise(std::size_t order, const PreciseCurveSource& source,
                                       const std::optional<std::vector<double>>& probes = std::nullopt);

struct RecoveryOptions {
    bool round = true;
    std::size_t cap = kDefaultCap;
    /// Node systems must have C_n = 1 (the empty residual is a cut).
    bool node_variant = true;
};

struct CutRecovery {
    /// Solution before rounding.
    std::vector<double> counts;
    /// Nearest integers, filled only when rounding was requested.
    std::vector<BigInt> rounded_counts;
    bool rounded = false;
    /// max_j |C_j - round(C_j)|.
    double max_rounding_deviation = 0.0;
    /// ||P C - rhs||_inf of the unrounded solution.
    double residual = 0.0;
    std::vector<double> probes;
    /// Ill-conditioning and consistency findings; empty when clean.
    std::vector<std::string> warnings;
};

inline constexpr double kResidualWarning = 1e-6;

CutRecovery recover_cut_counts(const ProbeSystem& system, RecoveryOptions options = {});

}  // namespace relpoly::cutset
