#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "relpoly/curve.hpp"
#include "relpoly/exact.hpp"
#include "relpoly/graph.hpp"
#include "relpoly/rng.hpp"

namespace relpoly::mc {

enum class EstimateKind { node, link };

/// Monte Carlo estimate of the cut fractions.
///
/// For the node kind, `disconnected[j]` is R_j: the number of runs whose
/// residual after removing the first j nodes of a random permutation was
/// disconnected (j = 0..N). The link kind does the same over link removals
/// (j = 0..L) with every node kept.
struct CutFractionEstimate {
    EstimateKind kind = EstimateKind::node;
    std::size_t node_count = 0;
    std::size_t order = 0;
    std::vector<std::uint64_t> disconnected;
    std::uint64_t runs = 0;
    RngSeed seed;

    /// c~_j = R_j / M.
    std::vector<double> fractions() const;
};

struct McOptions {
    /// 0 selects default_worker_count(). Results do not depend on it.
    std::size_t workers = 0;
};

inline constexpr std::uint64_t kDefaultRuns = 100'000;

CutFractionEstimate estimate_node_cut_fractions(const Graph& g, std::uint64_t runs, RngSeed seed,
                                                McOptions options = {});
CutFractionEstimate estimate_link_cut_fractions(const Graph& g, std::uint64_t runs, RngSeed seed,
                                                McOptions options = {});

/// 1 - sum_j C(n,j) c_j p^(n-j) (1-p)^j; also the link analogue with n = L.
double reliability_from_cut_fractions(std::span<const double> cut_fractions, double p);

Curve mc_node_reliability_curve(const CutFractionEstimate& est, std::span<const double> grid);

/// Link reliability curve of an existing link-kind estimate.
Curve mc_link_reliability_curve(const CutFractionEstimate& est, std::span<const double> grid);

Curve estimate_link_reliability_curve(const Graph& g, std::uint64_t runs, RngSeed seed,
                                      std::span<const double> grid, McOptions options = {});

/// Laplace point estimate. The S-form reads s at index Np; the C-form reads
/// 1 - c at index N(1-p). Non-integer indices interpolate linearly.
enum class LaplaceForm { s_form, c_form };

double laplace_from_connected(std::span<const double> connected_fractions, double p);
double laplace_from_cuts(std::span<const double> cut_fractions, double p);

double laplace_point(const CutFractionEstimate& est, double p, LaplaceForm form = LaplaceForm::c_form);
double laplace_point(const exact::ReliabilityCoefficients& coeffs, double p,
                     LaplaceForm form = LaplaceForm::s_form);

}  // namespace relpoly::mc
