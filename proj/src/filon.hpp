// Interpolatory quadrature support shared by the adaptive integrator and the
// oscillatory collision engine: Gauss-Kronrod 7/15 rules, Legendre coefficient
// extraction at the Kronrod nodes, and spherical-Bessel Filon moments
// int_{-1}^{1} P_k(x) e^{i alpha x} dx = 2 i^k j_k(alpha).
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace wkl::detail {

inline constexpr int kNodes15 = 15;
inline constexpr int kNodes7 = 7;

// Kronrod abscissae (symmetric) and weights; Gauss-7 weights on the odd nodes.
inline constexpr std::array<double, 15> kKronrodX = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr std::array<double, 15> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Gauss-7 weights aligned with Kronrod indices 1,3,5,7,9,11,13.
inline constexpr std::array<double, 7> kGauss7W = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

// Legendre coefficients of the degree-14 interpolant through the Kronrod
// nodes: a = V^{-1} g with V[i][k] = P_k(x_i). Computed once.
const std::array<std::array<double, 15>, 15>& legendre_from_kronrod15();
// Same for the degree-6 interpolant through the embedded Gauss-7 nodes.
const std::array<std::array<double, 7>, 7>& legendre_from_gauss7();

/// j_0..j_kmax (spherical Bessel, first kind) at alpha >= 0.
void sph_bessel_table(double alpha, int kmax, double* out);

struct FilonMoments {
    std::array<std::complex<double>, 15> m;  // m[k] = 2 i^k j_k(alpha)
};
FilonMoments filon_moments(double alpha);

inline double filon_alpha(double a, double b, double lambda) {
    return lambda * 0.5 * (b - a);
}

/// One Filon panel: samples g at the 15 Kronrod nodes of [a, b] (caller
/// supplies them) and returns the integral of g(x) e^{i lambda x} with an
/// embedded 15-vs-7 error estimate. `mom` must be filon_moments(filon_alpha(a, b, lambda)).
struct FilonPanelValue {
    std::complex<double> value;
    double err;
};

FilonPanelValue filon_panel(const double* g15, double a, double b, double lambda,
                            const FilonMoments& mom);

/// Map Kronrod node j of [-1,1] into [a, b].
inline double panel_node(double a, double b, int j) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    return c + h * kKronrodX[j];
}

}  // namespace wkl::detail
