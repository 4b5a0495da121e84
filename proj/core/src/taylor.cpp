#include "semitoric/taylor.hpp"

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace semitoric {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TaylorSeries2::TaylorSeries2(int order, std::map<Key, Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) fail(ErrorCode::InvalidArgument, "series order must be >= 1");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        auto [i, j] = it->first;
        if (i < 0 || j < 0 || i + j < 1)
            fail(ErrorCode::InvalidArgument, "series term with constant or negative exponent");
        if (i + j > order_)
            fail(ErrorCode::InvalidArgument, "series term beyond the declared order");
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Rational TaylorSeries2::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool in_sigma2_range(const Rational& r) {
    using F = boost::multiprecision::cpp_bin_float_50;
    static const F two_pi = 2 * boost::math::constants::pi<F>();
    F v(r);
    return v >= 0 && v < two_pi;
}

bool TaylorSeries2::normalized() const { return in_sigma2_range(sigma2()); }

double TaylorSeries2::ddx(double x, double y) const {
    double acc = 0;
    for (const auto& [key, c] : coeffs_) {
        auto [i, j] = key;
        if (i == 0) continue;
        acc += rat_to_double(c) * i * std::pow(x, i - 1) * std::pow(y, j);
    }
    return acc;
}

double TaylorSeries2::ddy(double x, double y) const {
    double acc = 0;
    for (const auto& [key, c] : coeffs_) {
        auto [i, j] = key;
        if (j == 0) continue;
        acc += rat_to_double(c) * j * std::pow(x, i) * std::pow(y, j - 1);
    }
    return acc;
}

bool TaylorSeries2::equal_up_to_common_order(const TaylorSeries2& other) const {
    int n = std::min(order_, other.order_);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            if (i + j < 1) continue;
            if (coeff(i, j) != other.coeff(i, j)) return false;
        }
    return true;
}

std::string TaylorSeries2::to_string() const {
    std::ostringstream os;
    os << "series[N=" << order_;
    for (const auto& [key, c] : coeffs_)
        os << " X^" << key.first << "Y^" << key.second << ":" << rat_to_string(c);
    os << "]";
    return os.str();
}

std::pair<double, double> synth_tau(const TaylorSeries2& s, double z1, double z2) {
    if (z1 == 0 && z2 == 0) fail(ErrorCode::OriginSingularity, "tau undefined at the origin");
    double r = std::hypot(z1, z2);
    double arg = std::atan2(z2, z1);
    if (arg < 0) arg += kTwoPi;
    double tau1 = s.ddx(z1, z2) - std::log(r);
    double tau2 = s.ddy(z1, z2) + arg;
    return {tau1, tau2};
}

TauField synth_tau_field(const TaylorSeries2& s, double radius, int rays, int radii) {
    if (radius <= 0 || radius >= 1) fail(ErrorCode::InvalidArgument, "radius must be in (0,1)");
    if (rays < 4 || radii < 8) fail(ErrorCode::InvalidArgument, "grid too small");
    TauField f;
    f.samples.reserve(size_t(rays) * radii);
    for (int a = 0; a < rays; ++a) {
        double theta = kTwoPi * a / rays;
        double c = std::cos(theta), sn = std::sin(theta);
        for (int k = 1; k <= radii; ++k) {
            double t = radius * k / radii;
            double z1 = t * c, z2 = t * sn;
            auto [t1, t2] = synth_tau(s, z1, z2);
            f.samples.push_back({z1, z2, t1, t2});
        }
    }
    return f;
}

TauField parse_tau_field(const std::string& text) {
    TauField f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream ls(trimmed);
        TauSample s{};
        if (!(ls >> s.z1 >> s.z2 >> s.tau1 >> s.tau2))
            fail(ErrorCode::ParseError, "tau table line " + std::to_string(lineno));
        if (s.z1 == 0 && s.z2 == 0)
            fail(ErrorCode::ParseError, "tau sample at the origin, line " + std::to_string(lineno));
        f.samples.push_back(s);
    }
    return f;
}

double RecoveredSeries::coeff(int i, int j) const {
    auto it = coeffs.find({i, j});
    return it == coeffs.end() ? 0.0 : it->second;
}

namespace {

struct SigmaSample {
    double x, y;
    double s1, s2;
};

// integral over [a, b] of the cubic through the 4 nodes (xs, ys)
double cubic_panel_integral(const double* xs, const double* ys, double a, double b) {
    double total = 0;
    for (int i = 0; i < 4; ++i) {
        double denom = 1;
        double roots[3];
        int rn = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            denom *= xs[i] - xs[j];
            roots[rn++] = xs[j];
        }
        double e1 = roots[0] + roots[1] + roots[2];
        double e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
        double e3 = roots[0] * roots[1] * roots[2];
        auto F = [&](double x) {
            return x * x * x * x / 4 - e1 * x * x * x / 3 + e2 * x * x / 2 - e3 * x;
        };
        total += ys[i] / denom * (F(b) - F(a));
    }
    return total;
}

// cumulative antiderivative at the nodes; exact for cubic integrands
std::vector<double> cumulative_integral(const std::vector<double>& t,
                                        const std::vector<double>& g) {
    const size_t n = t.size();
    std::vector<double> s(n, 0.0);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (n < 4) {
            s[k + 1] = s[k] + 0.5 * (g[k] + g[k + 1]) * (t[k + 1] - t[k]);
            continue;
        }
        size_t lo = (k == 0) ? 0 : std::min(k - 1, n - 4);
        double xs[4], ys[4];
        for (int m = 0; m < 4; ++m) {
            xs[m] = t[lo + m];
            ys[m] = g[lo + m];
        }
        s[k + 1] = s[k] + cubic_panel_integral(xs, ys, t[k], t[k + 1]);
    }
    return s;
}

int coeff_count(int order) { return (order + 1) * (order + 2) / 2 - 1; }

std::vector<TaylorSeries2::Key> coeff_keys(int order) {
    std::vector<TaylorSeries2::Key> keys;
    for (int d = 1; d <= order; ++d)
        for (int i = d; i >= 0; --i) keys.push_back({i, d - i});
    return keys;
}

} // namespace

RecoveredSeries extract_series(const TauField& field, int order, const ExtractOptions& opts) {
    if (order < 1) fail(ErrorCode::InvalidArgument, "order must be >= 1");
    const int ncoef = coeff_count(order);
    if (int(field.samples.size()) < opts.density_factor * ncoef)
        fail(ErrorCode::GridTooSparse,
             "need at least " + std::to_string(opts.density_factor * ncoef) + " samples");

    std::map<long long, std::vector<size_t>> rays;
    for (size_t i = 0; i < field.samples.size(); ++i) {
        const auto& s = field.samples[i];
        double arg = std::atan2(s.z2, s.z1);
        if (arg < 0) arg += kTwoPi;
        rays[llround(arg * 1e9)].push_back(i);
    }
    if (rays.size() < 4) fail(ErrorCode::GridTooSparse, "need at least 4 distinct rays");

    // sigma samples, tau2 re-lifted onto one consistent branch
    std::vector<SigmaSample> sig(field.samples.size());
    double ref = 0;
    bool have_ref = false;
    for (size_t i = 0; i < field.samples.size(); ++i) {
        const auto& s = field.samples[i];
        double r = std::hypot(s.z1, s.z2);
        double arg = std::atan2(s.z2, s.z1);
        if (arg < 0) arg += kTwoPi;
        double s1 = s.tau1 + std::log(r);
        double s2 = s.tau2 - arg;
        if (!have_ref) {
            ref = s2;
            have_ref = true;
        }
        s2 -= kTwoPi * std::round((s2 - ref) / kTwoPi);
        sig[i] = {s.z1, s.z2, s1, s2};
    }

    double scale = 0;
    for (const auto& s : sig) scale = std::max({scale, std::abs(s.x), std::abs(s.y)});
    if (scale == 0) fail(ErrorCode::GridTooSparse, "all samples at the origin");

    RecoveredSeries out;
    out.order = order;

    // closedness of sigma, via degree order-1 fits with constant terms
    {
        const int d = order - 1;
        std::vector<std::pair<int, int>> keys;
        for (int dd = 0; dd <= d; ++dd)
            for (int i = dd; i >= 0; --i) keys.push_back({i, dd - i});
        Eigen::MatrixXd A(sig.size(), keys.size());
        Eigen::VectorXd b1(sig.size()), b2(sig.size());
        for (size_t rw = 0; rw < sig.size(); ++rw) {
            double xs = sig[rw].x / scale, ys = sig[rw].y / scale;
            for (size_t c = 0; c < keys.size(); ++c)
                A(rw, c) = std::pow(xs, keys[c].first) * std::pow(ys, keys[c].second);
            b1(rw) = sig[rw].s1;
            b2(rw) = sig[rw].s2;
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
        if (qr.rank() < Eigen::Index(keys.size()))
            fail(ErrorCode::IllConditioned, "sigma fit is rank deficient");
        Eigen::VectorXd c1 = qr.solve(b1), c2 = qr.solve(b2);
        auto deriv = [&](const Eigen::VectorXd& c, double xs, double ys, bool by_y) {
            double acc = 0;
            for (size_t k = 0; k < keys.size(); ++k) {
                auto [i, j] = keys[k];
                if (by_y && j > 0) acc += c(k) * j * std::pow(xs, i) * std::pow(ys, j - 1);
                if (!by_y && i > 0) acc += c(k) * i * std::pow(xs, i - 1) * std::pow(ys, j);
            }
            return acc / scale;
        };
        double worst = 0;
        for (const auto& s : sig) {
            double xs = s.x / scale, ys = s.y / scale;
            worst = std::max(worst,
                             std::abs(deriv(c1, xs, ys, true) - deriv(c2, xs, ys, false)));
        }
        out.closedness_residual = worst;
        if (worst > opts.closedness_tol)
            fail(ErrorCode::NotClosed, "mixed partial residual " + std::to_string(worst));
    }

    // integrate sigma radially: S(t w) = integral_0^t sigma(s w) . w ds
    std::vector<double> Sx, Sy, Sv;
    for (auto& [angle_key, idx] : rays) {
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return std::hypot(sig[a].x, sig[a].y) < std::hypot(sig[b].x, sig[b].y);
        });
        if (idx.size() < 4) continue;
        double r0 = std::hypot(sig[idx[0]].x, sig[idx[0]].y);
        double w1 = sig[idx[0]].x / r0;
        double w2 = sig[idx[0]].y / r0;
        std::vector<double> t{0.0}, g{0.0};
        for (size_t i : idx) {
            t.push_back(std::hypot(sig[i].x, sig[i].y));
            g.push_back(sig[i].s1 * w1 + sig[i].s2 * w2);
        }
        // the integrand is smooth through 0: cubic extrapolation for g(0)
        double g0 = 0;
        for (int i = 1; i <= 4; ++i) {
            double li = 1;
            for (int j = 1; j <= 4; ++j)
                if (j != i) li *= (0 - t[j]) / (t[i] - t[j]);
            g0 += g[i] * li;
        }
        g[0] = g0;
        std::vector<double> s = cumulative_integral(t, g);
        for (size_t m = 1; m < t.size(); ++m) {
            Sx.push_back(w1 * t[m]);
            Sy.push_back(w2 * t[m]);
            Sv.push_back(s[m]);
        }
    }
    if (int(Sx.size()) < opts.density_factor * ncoef)
        fail(ErrorCode::GridTooSparse, "not enough usable rays for integration");

    auto keys = coeff_keys(order);
    Eigen::MatrixXd A(Sx.size(), keys.size());
    Eigen::VectorXd b(Sx.size());
    for (size_t rw = 0; rw < Sx.size(); ++rw) {
        double xs = Sx[rw] / scale, ys = Sy[rw] / scale;
        for (size_t c = 0; c < keys.size(); ++c)
            A(rw, c) = std::pow(xs, keys[c].first) * std::pow(ys, keys[c].second);
        b(rw) = Sv[rw];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < Eigen::Index(keys.size()))
        fail(ErrorCode::IllConditioned, "series fit is rank deficient");
    Eigen::VectorXd c = qr.solve(b);
    out.fit_residual = (A * c - b).cwiseAbs().maxCoeff();

    for (size_t k = 0; k < keys.size(); ++k) {
        auto [i, j] = keys[k];
        out.coeffs[{i, j}] = c(k) / std::pow(scale, i + j);
    }
    double& c01 = out.coeffs[{0, 1}];
    c01 -= kTwoPi * std::floor(c01 / kTwoPi);
    return out;
}

double max_coeff_error(const TaylorSeries2& s, const RecoveredSeries& rec) {
    double worst = 0;
    int n = std::min(s.order(), rec.order);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            if (i + j < 1) continue;
            worst = std::max(worst, std::abs(rat_to_double(s.coeff(i, j)) - rec.coeff(i, j)));
        }
    return worst;
}

} // namespace semitoric
