#include "wkl/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wkl {

void KernelParams::validate() const {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("KernelParams: beta must lie in [0, 1]");
    if (!(M > 6.0)) throw std::invalid_argument("KernelParams: M > 6 required");
}

void KernelParams::validate_oscillatory() const {
    validate();
    if (!(M > 10.0))
        throw std::invalid_argument("KernelParams: oscillatory runs require M > 10");
}

double omega2_of(double omega1, double omega3, double omega4) {
    return omega3 + omega4 - omega1;
}

OmegaQuad OmegaQuad::from_134(double omega1, double omega3, double omega4) {
    if (omega1 < 0.0 || omega3 < 0.0 || omega4 < 0.0)
        throw std::invalid_argument("OmegaQuad: frequencies must be nonnegative");
    double w2 = omega2_of(omega1, omega3, omega4);
    if (w2 < 0.0)
        throw std::invalid_argument("OmegaQuad: omega2 = omega3 + omega4 - omega1 < 0");
    return OmegaQuad{omega1, w2, omega3, omega4};
}

double cross_section(const OmegaQuad& q, const KernelParams& p) {
    if (q.omega1 == 0.0 && p.beta < 0.5)
        throw std::domain_error("cross_section: omega1 = 0 is singular for beta < 1/2");
    double mn = std::min(q.omega1, std::min(q.omega2, q.omega3));
    if (mn <= 0.0 && p.beta >= 0.5 && q.omega1 == 0.0) return 0.0;
    double prod = q.omega2 * q.omega3 * q.omega4;
    double pw = p.beta == 0.0 ? 1.0 : std::pow(prod, p.beta);
    return kCrossSectionPrefactor * std::pow(q.omega1, p.beta - 0.5) * pw * std::sqrt(mn);
}

std::array<int, 3> channel_triple(ChannelId c) {
    switch (c) {
        case ChannelId::C234: return {2, 3, 4};
        case ChannelId::C134: return {1, 3, 4};
        case ChannelId::C123: return {1, 2, 3};
        case ChannelId::C124: return {1, 2, 4};
    }
    return {0, 0, 0};
}

std::string_view channel_name(ChannelId c) {
    switch (c) {
        case ChannelId::C234: return "C234";
        case ChannelId::C134: return "C134";
        case ChannelId::C123: return "C123";
        case ChannelId::C124: return "C124";
    }
    return "?";
}

namespace {
double pick(const OmegaQuad& q, int j) {
    switch (j) {
        case 1: return q.omega1;
        case 2: return q.omega2;
        case 3: return q.omega3;
        default: return q.omega4;
    }
}
}  // namespace

double channel_product(ChannelId c, const Profile& k, const Profile& l, const Profile& m,
                       const OmegaQuad& q) {
    auto t = channel_triple(c);
    return k.eval(pick(q, t[0])) * l.eval(pick(q, t[1])) * m.eval(pick(q, t[2]));
}

std::string_view piece_name(PieceId p) {
    switch (p) {
        case PieceId::D21: return "D21";
        case PieceId::D22: return "D22";
        case PieceId::D3: return "D3";
        case PieceId::D1: return "D1";
    }
    return "?";
}

int piece_min_index(PieceId p) {
    switch (p) {
        case PieceId::D21:
        case PieceId::D22: return 2;
        case PieceId::D3: return 3;
        case PieceId::D1: return 1;
    }
    return 0;
}

bool classify_piece(double omega1, double omega3, double omega4, PieceId& out) {
    if (omega3 > omega4) return false;
    if (omega2_of(omega1, omega3, omega4) < 0.0) return false;
    if (omega3 > omega1) {
        out = PieceId::D1;
    } else if (omega4 > omega1) {
        out = PieceId::D3;
    } else if (omega3 < 0.5 * omega1) {
        out = PieceId::D21;
    } else {
        out = PieceId::D22;
    }
    return true;
}

PieceOuterRange piece_outer_range(PieceId p, double omega1) {
    switch (p) {
        case PieceId::D21: return {0.0, 0.5 * omega1, false};
        case PieceId::D22: return {0.5 * omega1, omega1, false};
        case PieceId::D3: return {0.0, omega1, false};
        case PieceId::D1: return {omega1, 0.0, true};
    }
    return {0, 0, false};
}

PieceInnerRange piece_inner_range(PieceId p, double omega1, double omega3) {
    switch (p) {
        case PieceId::D21: return {omega1 - omega3, omega1, false};
        case PieceId::D22: return {omega3, omega1, false};
        case PieceId::D3: return {omega1, 0.0, true};
        case PieceId::D1: return {omega3, 0.0, true};
    }
    return {0, 0, false};
}

double piece_prefactor(PieceId p, double omega1, const KernelParams& kp) {
    // D1 merges its sqrt(omega1) into the prefactor: 64 pi^3 omega1^beta.
    double e = (p == PieceId::D1) ? kp.beta : kp.beta - 0.5;
    return kCrossSectionPrefactor * std::pow(omega1, e);
}

double piece_kernel(PieceId p, double omega2, double omega3, double omega4,
                    const KernelParams& kp) {
    if (omega2 <= 0.0) return 0.0;
    const double b = kp.beta;
    double prod = omega2 * omega3 * omega4;
    double pw = b == 0.0 ? 1.0 : std::pow(prod, b);
    switch (p) {
        case PieceId::D21:
        case PieceId::D22: return pw * std::sqrt(omega2);
        case PieceId::D3: return pw * std::sqrt(omega3);
        case PieceId::D1: return pw;
    }
    return 0.0;
}

}  // namespace wkl
