#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "wkl/kernel.hpp"

namespace wkl {

struct QuadConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_depth = 40;
    /// Truncation bound for semi-infinite pieces; 0 selects max(1e6, 1e3 * omega1).
    double omega_max = 0.0;
    /// Oscillation frequency N of the integrand; 0 = smooth. Forces initial
    /// panel widths <= pi/(4N) on bounded ranges.
    double osc_freq = 0.0;
    /// Integrand evaluation budget per call; 0 selects a default.
    std::size_t max_evals = 0;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    double tail_bound = 0.0;
    std::size_t evaluations = 0;
    bool depth_exhausted = false;
    bool tail_insufficient = false;
    /// Integral of |f|; cancellation diagnostic.
    double abs_integral = 0.0;
};

double resolve_omega_max(const QuadConfig& cfg, double omega1);

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadConfig& cfg);

/// Integral of g(x) exp(i lambda x) over [a, b] for smooth g: interpolatory
/// Filon panels, cost independent of lambda.
struct OscResult {
    std::complex<double> value;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
};
OscResult integrate_osc(const std::function<double(double)>& g, double a, double b,
                        double lambda, const QuadConfig& cfg);

/// Iterated adaptive integration over one domain piece (inner omega4, outer
/// omega3). Semi-infinite ranges are truncated at resolve_omega_max(cfg, omega1)
/// with a tail bound extrapolated from the integrand's decay at the cutoff.
QuadResult integrate_piece(PieceId piece, double omega1,
                           const std::function<double(double, double)>& integrand,
                           const QuadConfig& cfg);

/// Same, with the integrand receiving the exact resonance partner omega2
/// (avoids re-deriving omega3 + omega4 - omega1 in the callback).
QuadResult integrate_piece_w2(PieceId piece, double omega1,
                              const std::function<double(double, double, double)>& integrand,
                              const QuadConfig& cfg);

}  // namespace wkl
