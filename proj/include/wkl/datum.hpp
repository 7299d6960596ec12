#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace wkl {

/// Japanese bracket <x> = sqrt(1 + x^2).
double bracket(double x);

/// <omega>^(-M/2), the reference power-law decay in omega = |k|^2 units.
/// Fast paths for M/4 integer and half-integer.
double powerlaw_weight(double omega, double M);

/// Geometric frequency grid: nodes omega_min * r^i with r = 10^(1/points_per_decade).
struct GeometricGrid {
    double omega_min = 1e-2;
    double omega_max = 1e6;
    int points_per_decade = 16;

    std::size_t size() const;
    double node(std::size_t i) const;
    std::vector<double> nodes() const;
    void validate() const;
};

struct PowerLawProfile {
    double M = 8.0;
};

struct OscillatoryProfile {
    double A = 5.0;
    double N = 32.0;
    double M = 12.0;
};

struct RayleighJeansProfile {
    double a = 1.0;
    double b = 1.0;
};

/// Smooth compactly supported bump h * exp(1 - 1/(1 - s^2)), s = (omega-center)/halfwidth.
struct BumpProfile {
    double center = 4.0;
    double halfwidth = 3.0;
    double height = 1.0;
};

/// Tabulated spectrum on a geometric grid. Log-log linear interpolation inside,
/// power-law tail n(omega_max) * (omega/omega_max)^tail_exponent above,
/// constant extension below omega_min.
struct GriddedProfile {
    GeometricGrid grid;
    std::vector<double> values;
    double tail_exponent = -4.0;
};

class Profile {
public:
    using Variant = std::variant<PowerLawProfile, OscillatoryProfile,
                                 RayleighJeansProfile, BumpProfile, GriddedProfile>;

    Profile() : v_(PowerLawProfile{}) {}
    Profile(PowerLawProfile p);
    Profile(OscillatoryProfile p);
    Profile(RayleighJeansProfile p);
    Profile(BumpProfile p);
    Profile(GriddedProfile p);

    double eval(double omega) const;

    /// eval(oa) - eval(ob), computed without catastrophic cancellation where
    /// the closed form allows it (power-law and Rayleigh-Jeans families).
    double eval_diff(double oa, double ob) const;

    const Variant& variant() const { return v_; }

    bool is_power_law() const { return std::holds_alternative<PowerLawProfile>(v_); }
    bool is_oscillatory() const { return std::holds_alternative<OscillatoryProfile>(v_); }
    bool is_rayleigh_jeans() const { return std::holds_alternative<RayleighJeansProfile>(v_); }

    /// One-line key=value form used by the CLI config and JSON echo.
    std::string describe() const;

private:
    Variant v_;
};

Profile make_power_law(double M);
Profile make_oscillatory(double A, double N, double M);
Profile make_rayleigh_jeans(double a, double b);
Profile make_bump(double center, double halfwidth, double height);
Profile make_gridded(GeometricGrid grid, std::vector<double> values, double tail_exponent);

struct WeightedNorm {
    double M = 0.0;
    double value = 0.0;
};

/// sup over grid nodes of <omega>^(M/2) |n(omega)|.
WeightedNorm weighted_sup_norm(const Profile& p, double M, const GeometricGrid& grid);

}  // namespace wkl
