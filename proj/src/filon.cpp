#include "filon.hpp"

#include <algorithm>

namespace wkl::detail {

namespace {

// P_0..P_kmax at x.
void legendre_values(double x, int kmax, double* p) {
    p[0] = 1.0;
    if (kmax >= 1) p[1] = x;
    for (int k = 1; k < kmax; ++k)
        p[k + 1] = ((2.0 * k + 1.0) * x * p[k] - k * p[k - 1]) / (k + 1.0);
}

template <int N>
std::array<std::array<double, N>, N> invert_vandermonde(const double* nodes) {
    // A[i][k] = P_k(nodes[i]); invert by Gauss-Jordan with partial pivoting.
    std::array<std::array<double, 2 * N>, N> a{};
    for (int i = 0; i < N; ++i) {
        double p[N];
        legendre_values(nodes[i], N - 1, p);
        for (int k = 0; k < N; ++k) a[i][k] = p[k];
        a[i][N + i] = 1.0;
    }
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        double d = a[col][col];
        for (int c = 0; c < 2 * N; ++c) a[col][c] /= d;
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            double f = a[r][col];
            if (f == 0.0) continue;
            for (int c = 0; c < 2 * N; ++c) a[r][c] -= f * a[col][c];
        }
    }
    // out[k][i]: coefficient k from sample i (transpose of the right block).
    std::array<std::array<double, N>, N> out{};
    for (int k = 0; k < N; ++k)
        for (int i = 0; i < N; ++i) out[k][i] = a[k][N + i];
    return out;
}

}  // namespace

const std::array<std::array<double, 15>, 15>& legendre_from_kronrod15() {
    static const auto m = invert_vandermonde<15>(kKronrodX.data());
    return m;
}

const std::array<std::array<double, 7>, 7>& legendre_from_gauss7() {
    static const auto m = [] {
        std::array<double, 7> g7{};
        for (int j = 0; j < 7; ++j) g7[j] = kKronrodX[2 * j + 1];
        return invert_vandermonde<7>(g7.data());
    }();
    return m;
}

void sph_bessel_table(double alpha, int kmax, double* out) {
    if (alpha < 1e-5) {
        // series j_k = a^k / (2k+1)!! * (1 - a^2/(2(2k+3)) + ...)
        double dfac = 1.0;  // (2k+1)!!
        double pw = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                dfac *= (2.0 * k + 1.0);
                pw *= alpha;
            }
            out[k] = pw / dfac * (1.0 - alpha * alpha / (2.0 * (2.0 * k + 3.0)));
        }
        return;
    }
    const double s = std::sin(alpha), c = std::cos(alpha);
    const double j0 = s / alpha;
    const double j1 = s / (alpha * alpha) - c / alpha;
    if (alpha >= kmax + 6.0) {
        // forward recurrence is stable while k stays below alpha
        out[0] = j0;
        if (kmax >= 1) out[1] = j1;
        for (int k = 1; k < kmax; ++k)
            out[k + 1] = (2.0 * k + 1.0) / alpha * out[k] - out[k - 1];
        return;
    }
    // Miller downward recurrence with two-anchor normalization
    int start = kmax + 10 + static_cast<int>(alpha);
    double fp = 0.0, fc = 1e-30;
    double tails[64];
    for (int k = start; k >= 0; --k) {
        double fm = (2.0 * k + 3.0) / alpha * fc - fp;
        fp = fc;
        fc = fm;
        if (k <= kmax) tails[k] = fc;
        // rescale to avoid overflow; already-stored entries scale with fc
        if (std::abs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            for (int j = std::max(k, 0); j <= kmax; ++j) tails[j] *= 1e-250;
        }
    }
    double scale;
    if (std::abs(j0) >= std::abs(j1) * 0.5)
        scale = j0 / tails[0];
    else
        scale = j1 / tails[1];
    for (int k = 0; k <= kmax; ++k) out[k] = tails[k] * scale;
}

FilonMoments filon_moments(double alpha) {
    FilonMoments fm;
    double j[15];
    sph_bessel_table(std::abs(alpha), 14, j);
    const bool neg = alpha < 0.0;
    for (int k = 0; k < 15; ++k) {
        // i^k cycle: 1, i, -1, -i ; j_k(-a) = (-1)^k j_k(a)
        double v = 2.0 * j[k];
        std::complex<double> ik;
        switch (k & 3) {
            case 0: ik = {1.0, 0.0}; break;
            case 1: ik = {0.0, 1.0}; break;
            case 2: ik = {-1.0, 0.0}; break;
            default: ik = {0.0, -1.0}; break;
        }
        std::complex<double> m = ik * v;
        if (neg) m = std::conj(m);
        fm.m[k] = m;
    }
    return fm;
}

FilonPanelValue filon_panel(const double* g15, double a, double b, double lambda,
                            const FilonMoments& mom) {
    const auto& c15 = legendre_from_kronrod15();
    const auto& c7 = legendre_from_gauss7();
    const double h = 0.5 * (b - a), mid = 0.5 * (a + b);

    std::complex<double> v15{0.0, 0.0};
    for (int k = 0; k < 15; ++k) {
        double ak = 0.0;
        for (int i = 0; i < 15; ++i) ak += c15[k][i] * g15[i];
        v15 += ak * mom.m[k];
    }
    std::complex<double> v7{0.0, 0.0};
    for (int k = 0; k < 7; ++k) {
        double ak = 0.0;
        for (int i = 0; i < 7; ++i) ak += c7[k][i] * g15[2 * i + 1];
        v7 += ak * mom.m[k];
    }
    std::complex<double> phase = std::polar(1.0, lambda * mid);
    FilonPanelValue out;
    out.value = h * phase * v15;
    out.err = h * std::abs(v15 - v7);
    return out;
}

}  // namespace wkl::detail
