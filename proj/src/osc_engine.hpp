// Phase-separated evaluation of collision integrals with oscillatory
// power-law data n(w) = w_M(w) (a + c cos(N w)). Products of such factors
// expand into finitely many terms  envelope(w2,w3,w4) * exp(i N (p w3 + q w4))
// with integer p, q; the inner integral is done per phase q with Filon panels
// (cost independent of N), the outer one resolves the surviving phases.
//
// The all-constant monomial (every slot contributing its `a`) can be excluded
// and handled by the smooth path instead; for the full combined integrand that
// part cancels to one power higher and needs the stable difference forms.
#pragma once

#include <cstddef>
#include <vector>

#include "wkl/kernel.hpp"
#include "wkl/quadrature.hpp"

namespace wkl::detail {

struct OscSlot {
    double a = 1.0;  // constant part
    double c = 0.0;  // cos(N w) coefficient
    double M = 8.0;  // envelope w_M = <w>^(-M/2)
};

struct OscTerm {
    double sign = 1.0;
    ChannelId channel = ChannelId::C234;
    std::array<OscSlot, 3> slots{};
};

struct OscEvalResult {
    double value = 0.0;
    double err = 0.0;
    std::size_t evals = 0;
    bool exhausted = false;
};

/// Integral over one piece (prefactor included) of
///   sum_t sign_t * piece_kernel * prod_s n_{slot}(w_{triple[s]})
/// with optional exclusion of the all-constant monomials.
OscEvalResult osc_collision_eval(const KernelParams& p, double N,
                                 const std::vector<OscTerm>& terms, bool drop_pure_const,
                                 PieceId piece, double omega1, const QuadConfig& cfg);

}  // namespace wkl::detail
