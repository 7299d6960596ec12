#pragma once

#include <array>
#include <string_view>

#include "wkl/datum.hpp"

namespace wkl {

/// Interaction strength beta in [0,1] and weight exponent M > 6.
struct KernelParams {
    double beta = 0.0;
    double M = 8.0;

    void validate() const;
    /// Oscillatory ill-posedness runs additionally need M > 10.
    void validate_oscillatory() const;
};

/// Resonant frequency quadruple; omega2 = omega3 + omega4 - omega1 by construction.
struct OmegaQuad {
    double omega1, omega2, omega3, omega4;

    static OmegaQuad from_134(double omega1, double omega3, double omega4);
};

/// omega3 + omega4 - omega1. Negative results signal "outside the domain".
double omega2_of(double omega1, double omega3, double omega4);

/// S = 64 pi^3 omega1^(beta-1/2) (omega2 omega3 omega4)^beta min{sqrt(w1), sqrt(w2), sqrt(w3)}.
double cross_section(const OmegaQuad& q, const KernelParams& p);

inline constexpr double kCrossSectionPrefactor = 64.0 * 31.006276680299820175476315067101;  // 64 pi^3

enum class ChannelId { C234, C134, C123, C124 };

inline constexpr std::array<ChannelId, 4> kAllChannels = {ChannelId::C234, ChannelId::C134,
                                                          ChannelId::C123, ChannelId::C124};

/// Index triple (j1, j2, j3) of the channel product k_{j1} l_{j2} m_{j3}.
std::array<int, 3> channel_triple(ChannelId c);
std::string_view channel_name(ChannelId c);

/// k(w_{j1}) * l(w_{j2}) * m(w_{j3}) for the channel's index triple.
double channel_product(ChannelId c, const Profile& k, const Profile& l, const Profile& m,
                       const OmegaQuad& q);

/// Integration-domain pieces of {0 <= w3 <= w4, w2 >= 0}, split by which of
/// w1, w2, w3 attains the min in the cross-section:
///   D21: w3 in [0, w1/2], w4 in [w1-w3, w1]   (sqrt(w2) factor)
///   D22: w1/2 <= w3 <= w4 <= w1               (sqrt(w2) factor)
///   D3 : 0 <= w3 <= w1 <= w4                  (sqrt(w3) factor)
///   D1 : w1 <= w3 <= w4                       (sqrt(w1) factor, merged into w1^beta prefactor)
enum class PieceId { D21, D22, D3, D1 };

inline constexpr std::array<PieceId, 4> kAllPieces = {PieceId::D21, PieceId::D22, PieceId::D3,
                                                      PieceId::D1};

std::string_view piece_name(PieceId p);

/// Which sqrt factor the cross-section contributes on this piece: the index i
/// of omega_i with omega_i = min{omega1, omega2, omega3}.
int piece_min_index(PieceId p);

/// Half-open ownership convention for classification (boundaries are measure zero):
/// D1 owns w3 > w1; D3 owns w4 > w1 with w3 <= w1; within w4 <= w1, D21 owns
/// w3 < w1/2 and D22 owns w3 >= w1/2. Points with w2 < 0 belong to no piece.
/// Returns true and sets `out` when the point lies in some piece.
bool classify_piece(double omega1, double omega3, double omega4, PieceId& out);

/// Outer w3 range of a piece. For D1 the upper end is the caller's truncation bound.
struct PieceOuterRange {
    double lo, hi;
    bool hi_unbounded;
};
PieceOuterRange piece_outer_range(PieceId p, double omega1);

/// Inner w4 range at fixed w3. For D3/D1 the upper end is unbounded (truncated by caller).
struct PieceInnerRange {
    double lo, hi;
    bool hi_unbounded;
};
PieceInnerRange piece_inner_range(PieceId p, double omega1, double omega3);

/// Cross-section kernel restricted to a piece, with the piece's sqrt factor and
/// the 64 pi^3 omega1^(beta-1/2) prefactor split off:
///   S = prefactor(piece, omega1) * piece_kernel(piece, w2, w3, w4)
double piece_prefactor(PieceId p, double omega1, const KernelParams& kp);
double piece_kernel(PieceId p, double omega2, double omega3, double omega4,
                    const KernelParams& kp);

}  // namespace wkl
