#pragma once

#include <array>
#include <vector>

#include "wkl/kernel.hpp"
#include "wkl/quadrature.hpp"

namespace wkl {

struct PieceResult {
    ChannelId channel;
    PieceId piece;
    double value = 0.0;
    QuadResult quad;
};

struct CollisionResult {
    double omega1 = 0.0;
    std::vector<PieceResult> per_piece;  // 4 channels x 4 pieces
    double gain = 0.0;
    double loss = 0.0;
    double full = 0.0;           // gain - loss, assembled from channel sums
    double full_combined = 0.0;  // one quadrature pass over the combined integrand
    QuadResult combined_quad;
    double err_sum = 0.0;  // sum of per-piece error estimates
    /// |full| below 10x the accumulated quadrature error: cancellation exceeds
    /// numeric resolution, the channel-split difference is unreliable.
    bool cancellation_warning = false;
};

/// One channel/piece integral with the piece's sqrt factor and prefactor.
PieceResult collision_piece(const KernelParams& p, ChannelId c, PieceId piece,
                            const Profile& k, const Profile& l, const Profile& m,
                            double omega1, const QuadConfig& cfg);

/// Gain channels C234 + C134 with (k, l, m) = (n, n, n), all pieces summed.
QuadResult gain(const KernelParams& p, const Profile& n, double omega1, const QuadConfig& cfg);

/// Loss channels C123 + C124.
QuadResult loss(const KernelParams& p, const Profile& n, double omega1, const QuadConfig& cfg);

/// Full operator with all 16 channel/piece integrals retained, plus the
/// combined-integrand pass used for cancellation-sensitive diagnostics.
CollisionResult full_collision(const KernelParams& p, const Profile& n, double omega1,
                               const QuadConfig& cfg);

/// Combined-integrand pass only (cheaper when per-piece values are not needed).
QuadResult full_combined(const KernelParams& p, const Profile& n, double omega1,
                         const QuadConfig& cfg);

/// Modified gain-channel integral: the C234 cross-section carries the extra
/// factor |<w1>^(M/2) - <w4>^(M/2)| / <w1>^(M/2), inputs fixed to the
/// reference power-law datum.
QuadResult cprime_234(const KernelParams& p, double omega1, const QuadConfig& cfg);

/// The six-term decomposition of the full operator on the oscillatory datum
/// A n01 + n02, evaluated at omega1 (meant for peaks omega1 = 2 pi B / N).
struct TermDecomposition {
    double omega1 = 0.0;
    std::array<double, 6> I{};  // I1..I6
    double margin = 0.0;        // I1 - (I2 + ... + I6)
};
TermDecomposition term_decomposition(const KernelParams& p, double A, double N, double omega1,
                                     const QuadConfig& cfg);

}  // namespace wkl
