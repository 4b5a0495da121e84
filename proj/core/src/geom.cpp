#include "semitoric/geom.hpp"

#include <algorithm>
#include <sstream>

namespace semitoric {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateVector: return "DegenerateVector";
        case ErrorCode::EmptyInterior: return "EmptyInterior";
        case ErrorCode::EmptySlice: return "EmptySlice";
        case ErrorCode::UnboundedSlice: return "UnboundedSlice";
        case ErrorCode::PointNotOnBoundary: return "PointNotOnBoundary";
        case ErrorCode::NonConvexImage: return "NonConvexImage";
        case ErrorCode::SignsNotNormalized: return "SignsNotNormalized";
        case ErrorCode::ComplexityTooLarge: return "ComplexityTooLarge";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NotCanonicalizable: return "NotCanonicalizable";
        case ErrorCode::InvalidIngredients: return "InvalidIngredients";
        case ErrorCode::IncomparableTruncation: return "IncomparableTruncation";
        case ErrorCode::OriginSingularity: return "OriginSingularity";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::GridTooSparse: return "GridTooSparse";
        case ErrorCode::WindowRequired: return "WindowRequired";
        case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
        case ErrorCode::UndecomposableTransition: return "UndecomposableTransition";
        case ErrorCode::CutNotCovered: return "CutNotCovered";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

std::optional<Rational> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto parse_int = [](const std::string& t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        return BigInt(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return make_rational(*n, *d);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt rat_floor(const Rational& r) { return floor_div(num(r), den(r)); }

bool lex_less(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Rational cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

Rational chebyshev(const Pt& a, const Pt& b) {
    return rat_max(rat_abs(a.x - b.x), rat_abs(a.y - b.y));
}

std::string pt_to_string(const Pt& p) {
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

VecZ2 primitive(const VecZ2& v) {
    if (v.is_zero()) fail(ErrorCode::DegenerateVector, "primitive of zero vector");
    BigInt g = gcd(abs(v.x), abs(v.y));
    return {v.x / g, v.y / g};
}

BigInt det2(const VecZ2& u, const VecZ2& v) { return u.x * v.y - u.y * v.x; }

VecZ2 primitive_direction(const Pt& a, const Pt& b) {
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    if (dx == 0 && dy == 0) fail(ErrorCode::DegenerateVector, "direction of equal points");
    BigInt scale = lcm(den(dx), den(dy));
    return primitive(VecZ2{num(dx) * (scale / den(dx)), num(dy) * (scale / den(dy))});
}

MatZ2 MatZ2::inverse() const {
    BigInt dd = det();
    if (dd != 1 && dd != -1)
        fail(ErrorCode::InvalidArgument, "inverse of non-unimodular matrix");
    // adj / det with det = +-1
    return {d * dd, -b * dd, -c * dd, a * dd};
}

AffineMapZ compose_affine(const AffineMapZ& after, const AffineMapZ& before) {
    return {after.linear * before.linear, after.apply(before.translation)};
}

AffineMapZ invert_affine(const AffineMapZ& m) {
    MatZ2 inv = m.linear.inverse();
    Pt t = inv.apply(m.translation);
    return {inv, Pt{-t.x, -t.y}};
}

PiecewiseShear::PiecewiseShear(std::vector<ShearCut> cs) : cuts(std::move(cs)) {
    std::sort(cuts.begin(), cuts.end(),
              [](const ShearCut& l, const ShearCut& r) { return l.lambda < r.lambda; });
    // merge duplicates, drop zero weights
    std::vector<ShearCut> merged;
    for (auto& c : cuts) {
        if (!merged.empty() && merged.back().lambda == c.lambda)
            merged.back().n += c.n;
        else
            merged.push_back(c);
    }
    std::erase_if(merged, [](const ShearCut& c) { return c.n == 0; });
    cuts = std::move(merged);
}

bool PiecewiseShear::trivial() const { return cuts.empty(); }

PiecewiseShear PiecewiseShear::inverse() const {
    std::vector<ShearCut> inv;
    inv.reserve(cuts.size());
    for (const auto& c : cuts) inv.push_back({c.lambda, -c.n});
    return PiecewiseShear(std::move(inv));
}

Pt apply_tln(const Rational& lambda, const BigInt& n, const Pt& p) {
    if (p.x < lambda) return p;
    return {p.x, p.y + Rational(n) * (p.x - lambda)};
}

Pt apply_tvec(const PiecewiseShear& ps, const Pt& p) {
    Pt q = p;
    for (const auto& c : ps.cuts) q = apply_tln(c.lambda, c.n, q);
    return q;
}

} // namespace semitoric
