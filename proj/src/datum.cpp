#include "wkl/datum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wkl {

double bracket(double x) { return std::sqrt(1.0 + x * x); }

namespace {

double ipow(double base, int n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool near_int(double x, int& out) {
    double r = std::round(x);
    if (std::abs(x - r) < 1e-12 && r >= 0.0 && r <= 64.0) {
        out = static_cast<int>(r);
        return true;
    }
    return false;
}

}  // namespace

double powerlaw_weight(double omega, double M) {
    const double t = 1.0 + omega * omega;
    int m;
    if (near_int(M / 4.0, m)) return ipow(1.0 / t, m);
    if (near_int(M / 2.0, m)) {
        // exponent m/2 with m odd
        double half = std::sqrt(1.0 / t);
        return ipow(1.0 / t, m / 2) * ((m & 1) ? half : 1.0);
    }
    return std::pow(t, -0.25 * M);
}

std::size_t GeometricGrid::size() const {
    double decades = std::log10(omega_max / omega_min);
    return static_cast<std::size_t>(std::floor(decades * points_per_decade + 0.5)) + 1;
}

double GeometricGrid::node(std::size_t i) const {
    return omega_min * std::pow(10.0, static_cast<double>(i) / points_per_decade);
}

std::vector<double> GeometricGrid::nodes() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = node(i);
    return out;
}

void GeometricGrid::validate() const {
    if (!(omega_min > 0.0) || !(omega_max > omega_min))
        throw std::invalid_argument("GeometricGrid: need 0 < omega_min < omega_max");
    if (points_per_decade < 1)
        throw std::invalid_argument("GeometricGrid: points_per_decade >= 1 required");
}

Profile::Profile(PowerLawProfile p) : v_(p) {
    if (!(p.M > 0.0)) throw std::invalid_argument("PowerLaw: M > 0 required");
}

Profile::Profile(OscillatoryProfile p) : v_(p) {
    if (!(p.A > 1.0)) throw std::invalid_argument("Oscillatory: A > 1 required for positivity");
    if (!(p.N > 0.0)) throw std::invalid_argument("Oscillatory: N > 0 required");
    if (!(p.M > 0.0)) throw std::invalid_argument("Oscillatory: M > 0 required");
}

Profile::Profile(RayleighJeansProfile p) : v_(p) {
    if (!(p.a > 0.0) || !(p.b >= 0.0))
        throw std::invalid_argument("RayleighJeans: a > 0 and b >= 0 required");
}

Profile::Profile(BumpProfile p) : v_(p) {
    if (!(p.halfwidth > 0.0) || !(p.center - p.halfwidth >= 0.0))
        throw std::invalid_argument("Bump: need halfwidth > 0 and support within [0, inf)");
}

Profile::Profile(GriddedProfile p) : v_(std::move(p)) {
    const auto& g = std::get<GriddedProfile>(v_);
    g.grid.validate();
    if (g.values.size() != g.grid.size())
        throw std::invalid_argument("Gridded: values size must match grid size");
}

namespace {

double eval_gridded(const GriddedProfile& g, double omega) {
    const auto& grid = g.grid;
    const std::size_t n = g.values.size();
    if (omega <= grid.omega_min) return g.values.front();  // constant extension below
    if (omega >= grid.omega_max) {
        double top = g.values.back();
        if (top == 0.0) return 0.0;
        return top * std::pow(omega / grid.omega_max, g.tail_exponent);
    }
    // uniform in log10: locate cell directly
    double pos = std::log10(omega / grid.omega_min) * grid.points_per_decade;
    std::size_t i = std::min(static_cast<std::size_t>(pos), n - 2);
    double x0 = grid.node(i), x1 = grid.node(i + 1);
    double y0 = g.values[i], y1 = g.values[i + 1];
    double t = std::log(omega / x0) / std::log(x1 / x0);
    if (y0 > 0.0 && y1 > 0.0)
        return y0 * std::exp(t * std::log(y1 / y0));
    // fall back to linear-in-log-omega when signs do not allow log-log
    return y0 + t * (y1 - y0);
}

}  // namespace

double Profile::eval(double omega) const {
    return std::visit(
        [omega](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PowerLawProfile>) {
                return powerlaw_weight(omega, p.M);
            } else if constexpr (std::is_same_v<T, OscillatoryProfile>) {
                return (p.A + std::cos(p.N * omega)) * powerlaw_weight(omega, p.M);
            } else if constexpr (std::is_same_v<T, RayleighJeansProfile>) {
                return 1.0 / (p.a + p.b * omega);
            } else if constexpr (std::is_same_v<T, BumpProfile>) {
                double s = (omega - p.center) / p.halfwidth;
                if (std::abs(s) >= 1.0) return 0.0;
                return p.height * std::exp(1.0 - 1.0 / (1.0 - s * s));
            } else {
                return eval_gridded(p, omega);
            }
        },
        v_);
}

double Profile::eval_diff(double oa, double ob) const {
    if (const auto* p = std::get_if<PowerLawProfile>(&v_)) {
        // n(a) - n(b) = n(b) * expm1(-(M/4) * log((1+a^2)/(1+b^2)))
        double nb = powerlaw_weight(ob, p->M);
        double r = std::log1p((oa - ob) * (oa + ob) / (1.0 + ob * ob));
        return nb * std::expm1(-0.25 * p->M * r);
    }
    if (const auto* p = std::get_if<RayleighJeansProfile>(&v_)) {
        double da = p->a + p->b * oa, db = p->a + p->b * ob;
        return p->b * (ob - oa) / (da * db);
    }
    return eval(oa) - eval(ob);
}

std::string Profile::describe() const {
    std::ostringstream os;
    std::visit(
        [&os](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PowerLawProfile>) {
                os << "powerlaw M=" << p.M;
            } else if constexpr (std::is_same_v<T, OscillatoryProfile>) {
                os << "oscillatory A=" << p.A << " N=" << p.N << " M=" << p.M;
            } else if constexpr (std::is_same_v<T, RayleighJeansProfile>) {
                os << "rayleigh_jeans a=" << p.a << " b=" << p.b;
            } else if constexpr (std::is_same_v<T, BumpProfile>) {
                os << "bump center=" << p.center << " halfwidth=" << p.halfwidth
                   << " height=" << p.height;
            } else {
                os << "gridded n=" << p.values.size() << " tail=" << p.tail_exponent;
            }
        },
        v_);
    return os.str();
}

Profile make_power_law(double M) { return Profile(PowerLawProfile{M}); }
Profile make_oscillatory(double A, double N, double M) { return Profile(OscillatoryProfile{A, N, M}); }
Profile make_rayleigh_jeans(double a, double b) { return Profile(RayleighJeansProfile{a, b}); }
Profile make_bump(double center, double halfwidth, double height) {
    return Profile(BumpProfile{center, halfwidth, height});
}
Profile make_gridded(GeometricGrid grid, std::vector<double> values, double tail_exponent) {
    return Profile(GriddedProfile{grid, std::move(values), tail_exponent});
}

WeightedNorm weighted_sup_norm(const Profile& p, double M, const GeometricGrid& grid) {
    grid.validate();
    double sup = 0.0;
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        double w = grid.node(i);
        double v = std::abs(p.eval(w)) / powerlaw_weight(w, M);
        sup = std::max(sup, v);
    }
    return WeightedNorm{M, sup};
}

}  // namespace wkl
