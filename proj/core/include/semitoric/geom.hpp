#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "semitoric/rational.hpp"

namespace semitoric {

// Exact rational point in the plane.
struct Pt {
    Rational x;
    Rational y;

    Pt() = default;
    Pt(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Pt&) const = default;

    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const Rational& s) const { return {x * s, y * s}; }
};

// Lexicographic (x, then y); used for canonical vertex ordering.
bool lex_less(const Pt& a, const Pt& b);

Rational cross(const Pt& a, const Pt& b);
Rational chebyshev(const Pt& a, const Pt& b);

std::string pt_to_string(const Pt& p);

// Integer vector, arbitrary precision.
struct VecZ2 {
    BigInt x;
    BigInt y;

    VecZ2() : x(0), y(0) {}
    VecZ2(BigInt vx, BigInt vy) : x(std::move(vx)), y(std::move(vy)) {}

    bool operator==(const VecZ2&) const = default;

    VecZ2 operator+(const VecZ2& o) const { return {x + o.x, y + o.y}; }
    VecZ2 operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

// v / gcd(|x|,|y|), same direction. Zero vector is an error.
VecZ2 primitive(const VecZ2& v);

BigInt det2(const VecZ2& u, const VecZ2& v);

// Primitive integer direction of the segment from `a` to `b`.
VecZ2 primitive_direction(const Pt& a, const Pt& b);

// 2x2 integer matrix, row-major.
struct MatZ2 {
    BigInt a, b, c, d;

    MatZ2() : a(1), b(0), c(0), d(1) {}
    MatZ2(BigInt ma, BigInt mb, BigInt mc, BigInt md)
        : a(std::move(ma)), b(std::move(mb)), c(std::move(mc)), d(std::move(md)) {}

    bool operator==(const MatZ2&) const = default;

    BigInt det() const { return a * d - b * c; }
    bool unimodular() const { BigInt dd = det(); return dd == 1 || dd == -1; }

    Pt apply(const Pt& p) const {
        return {Rational(a) * p.x + Rational(b) * p.y, Rational(c) * p.x + Rational(d) * p.y};
    }
    VecZ2 apply(const VecZ2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    MatZ2 operator*(const MatZ2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    MatZ2 inverse() const;

    static MatZ2 identity() { return {}; }
    // T^k = [[1,0],[k,1]]: (x,y) -> (x, kx+y). The global shear group.
    static MatZ2 shear(const BigInt& k) { return {1, 0, k, 1}; }
    // T_k = [[1,k],[0,1]]: the transposed shear showing up in edge-to-edge transitions.
    static MatZ2 upper_shear(const BigInt& k) { return {1, k, 0, 1}; }
};

// Element of Aff(2,Z): unimodular linear part plus rational translation.
struct AffineMapZ {
    MatZ2 linear;
    Pt translation;

    AffineMapZ() = default;
    AffineMapZ(MatZ2 lin, Pt t) : linear(std::move(lin)), translation(std::move(t)) {}

    bool operator==(const AffineMapZ&) const = default;

    Pt apply(const Pt& p) const {
        Pt q = linear.apply(p);
        return {q.x + translation.x, q.y + translation.y};
    }

    static AffineMapZ identity() { return {}; }
    static AffineMapZ translate(const Pt& t) { return {MatZ2::identity(), t}; }
    // Global T^k about the origin.
    static AffineMapZ global_shear(const BigInt& k) { return {MatZ2::shear(k), Pt{0, 0}}; }
    // t restricted to the half-plane x >= lambda, as an affine map:
    // (x,y) -> (x, y + n(x - lambda)).
    static AffineMapZ shear_about(const Rational& lambda, const BigInt& n) {
        return {MatZ2::shear(n), Pt{Rational(0), -Rational(n) * lambda}};
    }

    bool is_identity() const { return *this == AffineMapZ(); }
};

AffineMapZ compose_affine(const AffineMapZ& after, const AffineMapZ& before);
AffineMapZ invert_affine(const AffineMapZ& m);
inline Pt apply_affine(const AffineMapZ& m, const Pt& p) { return m.apply(p); }

// One vertical cut with an integer shear weight.
struct ShearCut {
    Rational lambda;
    BigInt n;

    bool operator==(const ShearCut&) const = default;
};

// t_vec: composition of t^{n_j}_{lambda_j}. Cuts kept sorted by lambda.
struct PiecewiseShear {
    std::vector<ShearCut> cuts;

    PiecewiseShear() = default;
    explicit PiecewiseShear(std::vector<ShearCut> cs);

    bool operator==(const PiecewiseShear&) const = default;

    bool trivial() const;
    PiecewiseShear inverse() const;
};

// t^n_l applied to a point: identity left of the line, T^n about the line on the right.
Pt apply_tln(const Rational& lambda, const BigInt& n, const Pt& p);
Pt apply_tvec(const PiecewiseShear& ps, const Pt& p);

} // namespace semitoric
