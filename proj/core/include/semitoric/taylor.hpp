#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/rational.hpp"

namespace semitoric {

// Truncated formal series in two variables with vanishing constant term.
// Keys are (i, j) exponent pairs with 0 < i + j <= order; zero coefficients
// are not stored.
class TaylorSeries2 {
public:
    using Key = std::pair<int, int>;

    TaylorSeries2(int order, std::map<Key, Rational> coeffs);

    int order() const { return order_; }
    const std::map<Key, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int i, int j) const;
    // Y-coefficient sigma_2; the normalization requires it in [0, 2*pi).
    Rational sigma2() const { return coeff(0, 1); }
    bool normalized() const;

    // Partial derivatives evaluated in double precision.
    double ddx(double x, double y) const;
    double ddy(double x, double y) const;

    bool operator==(const TaylorSeries2&) const = default;

    // Term-by-term equality up to min(order, other.order).
    bool equal_up_to_common_order(const TaylorSeries2& other) const;

    std::string to_string() const;

private:
    int order_;
    std::map<Key, Rational> coeffs_;
};

// sigma_2 in [0, 2*pi) check, decided with 50-digit floats.
bool in_sigma2_range(const Rational& r);

struct TauSample {
    double z1, z2;
    double tau1, tau2; // tau2 carried as a real lift
};

struct TauField {
    std::vector<TauSample> samples;
};

// tau at a point of the punctured disk for the series S:
//   tau1 = dS/dz1 - Re ln z,  tau2 = dS/dz2 + Im ln z,  arg in [0, 2*pi).
std::pair<double, double> synth_tau(const TaylorSeries2& s, double z1, double z2);

// Polar sampling grid: `rays` directions, `radii` samples per ray up to radius r.
TauField synth_tau_field(const TaylorSeries2& s, double radius, int rays, int radii);

// z1 z2 tau1 tau2 per line, decimal.
TauField parse_tau_field(const std::string& text);

struct RecoveredSeries {
    int order = 0;
    std::map<TaylorSeries2::Key, double> coeffs;
    double closedness_residual = 0; // max |d(sigma1)/dy - d(sigma2)/dx| on the grid
    double fit_residual = 0;        // max |S_fit - S_integrated| over fit points

    double coeff(int i, int j) const;
};

struct ExtractOptions {
    double closedness_tol = 1e-6;
    // least-squares needs at least this many samples per coefficient
    int density_factor = 3;
};

RecoveredSeries extract_series(const TauField& field, int order,
                               const ExtractOptions& opts = {});

// max |c_ij(S) - c_ij(recovered)| over 0 < i+j <= min order
double max_coeff_error(const TaylorSeries2& s, const RecoveredSeries& rec);

} // namespace semitoric
