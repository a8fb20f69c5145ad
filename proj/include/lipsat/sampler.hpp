#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lipsat/lipschitz.hpp"
#include "lipsat/series.hpp"

namespace lipsat {

/// Shrinking neighborhoods realized as annuli of parameter magnitudes.
struct EpsilonLadder {
    std::vector<double> scales = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    int samples_per_scale = 64;
    std::uint64_t seed = 0;
};

enum class VerdictHint { Bounded, Diverging, Inconclusive };

std::string to_string(VerdictHint h);

/// Observed suprema of a tested ratio per scale. Never a proof: the hint
/// flags divergence only on a sustained (>= 10x over >= 3 consecutive
/// scales) blow-up, and the exponent is a log-log least-squares slope.
struct RatioReport {
    std::vector<double> scale_maxima;           // one per ladder scale
    std::vector<std::vector<double>> samples;   // raw ratios per scale
    VerdictHint verdict_hint = VerdictHint::Inconclusive;
    double growth_exponent_estimate = 0.0;      // vs 1/scale
    int degenerate_count = 0;                   // guarded divisions skipped
};

/// sup |p| / sup_i |g_i| at random points of the branches, per scale.
RatioReport sample_ideal_ratio(const Polynomial& p,
                               const std::vector<Polynomial>& gens,
                               const std::vector<Branch>& branches,
                               const EpsilonLadder& ladder);

/// sup |f(y1) - f(y2)| / ||pi(y1) - pi(y2)||_inf over sampled branch-point
/// pairs, per scale. Coincident images with differing f values are counted
/// as degenerate (a saturation-failure hint), never divided through.
RatioReport sample_lipschitz_ratio(const SaturationQuery& q,
                                   const std::vector<Branch>& branches,
                                   const EpsilonLadder& ladder);

}  // namespace lipsat
