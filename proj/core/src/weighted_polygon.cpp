#include "semitoric/weighted_polygon.hpp"

#include <algorithm>
#include <set>

namespace semitoric {

namespace {

const MatZ2 kT = MatZ2::shear(1);

BigInt mod_pos(const BigInt& b, const BigInt& abs_a) {
    BigInt m = b % abs_a;
    if (m < 0) m += abs_a;
    return m;
}

PiecewiseShear flip_shear(const WeightedPolygon& w, const std::vector<int>& flips) {
    std::vector<ShearCut> cuts;
    for (size_t j = 0; j < w.lines.size(); ++j) {
        // (old sign - new sign)/2: flipping a cut by -1 shears by the old sign
        if (flips[j] == -1) cuts.push_back({w.lines[j], BigInt(w.signs[j])});
    }
    return PiecewiseShear(std::move(cuts));
}

} // namespace

WeightedPolygon::WeightedPolygon(RationalPolygon poly, std::vector<Rational> ls,
                                 std::vector<int> sg)
    : polygon(std::move(poly)), lines(std::move(ls)), signs(std::move(sg)) {
    if (lines.size() != signs.size())
        fail(ErrorCode::InvalidArgument, "lines and signs must have equal length");
    for (int s : signs)
        if (s != 1 && s != -1) fail(ErrorCode::InvalidArgument, "signs must be +-1");
    for (size_t j = 0; j + 1 < lines.size(); ++j)
        if (!(lines[j] < lines[j + 1]))
            fail(ErrorCode::InvalidArgument, "line abscissas must be strictly increasing");
    auto lo = polygon.x_min();
    auto hi = polygon.x_max();
    for (const auto& l : lines) {
        if (lo && !(*lo < l))
            fail(ErrorCode::InvalidArgument, "line at or left of the polygon x-range");
        if (hi && !(l < *hi))
            fail(ErrorCode::InvalidArgument, "line at or right of the polygon x-range");
    }
}

bool WeightedPolygon::all_plus() const {
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

PonderedWeightedPolygon::PonderedWeightedPolygon(WeightedPolygon b, std::vector<BigInt> ks)
    : base(std::move(b)), indices(std::move(ks)) {
    if (indices.size() != base.complexity())
        fail(ErrorCode::InvalidArgument, "one twisting index per line required");
}

GroupElement GroupElement::compose(const GroupElement& other) const {
    if (sign_flips.size() != other.sign_flips.size())
        fail(ErrorCode::InvalidArgument, "group elements of different complexity");
    GroupElement g;
    g.sign_flips.resize(sign_flips.size());
    for (size_t i = 0; i < sign_flips.size(); ++i)
        g.sign_flips[i] = sign_flips[i] * other.sign_flips[i];
    g.shear = shear + other.shear;
    return g;
}

const char* corner_kind_name(CornerKind k) {
    switch (k) {
        case CornerKind::DelzantCorner: return "DelzantCorner";
        case CornerKind::HiddenDelzantCorner: return "HiddenDelzantCorner";
        case CornerKind::FakeCorner: return "FakeCorner";
        case CornerKind::NonVertexOnLine: return "NonVertexOnLine";
        case CornerKind::Violation: return "Violation";
    }
    return "?";
}

WeightedPolygon act(const GroupElement& g, const WeightedPolygon& w) {
    if (g.sign_flips.size() != w.complexity())
        fail(ErrorCode::InvalidArgument, "group element complexity mismatch");
    RationalPolygon p = w.polygon;
    if (g.shear != 0) p = p.map_affine(AffineMapZ::global_shear(g.shear));
    p = p.map_shear(flip_shear(w, g.sign_flips));
    std::vector<int> new_signs(w.signs.size());
    for (size_t j = 0; j < w.signs.size(); ++j) new_signs[j] = g.sign_flips[j] * w.signs[j];
    return WeightedPolygon(std::move(p), w.lines, std::move(new_signs));
}

PonderedWeightedPolygon act_pondered(const GroupElement& g, const PonderedWeightedPolygon& pw) {
    WeightedPolygon b = act(g, pw.base);
    std::vector<BigInt> ks = pw.indices;
    for (auto& k : ks) k += g.shear;
    return PonderedWeightedPolygon(std::move(b), std::move(ks));
}

CornerClass classify_corner(const WeightedPolygon& w, const Pt& z) {
    if (!w.all_plus())
        fail(ErrorCode::SignsNotNormalized, "classification needs the all-plus representative");
    if (!w.polygon.on_boundary(z)) fail(ErrorCode::PointNotOnBoundary, pt_to_string(z));

    bool line_through = std::any_of(w.lines.begin(), w.lines.end(),
                                    [&z](const Rational& l) { return l == z.x; });
    bool vertex = w.polygon.is_vertex(z);

    if (!line_through) {
        if (!vertex)
            return {CornerKind::Violation, z, 0, "edge point without a line is unclassified"};
        CornerBasis cb = w.polygon.corner_basis(z);
        BigInt d = det2(cb.u, cb.v);
        if (d == 1) return {CornerKind::DelzantCorner, z, d, ""};
        return {CornerKind::Violation, z, d, "det(u,v) != 1 at a vertex without a line"};
    }

    VerticalSlice s = w.polygon.vertical_slice(z.x);
    if (!s.compact())
        return {CornerKind::Violation, z, 0, "slice at the line is not compact"};
    if (z == s.top) {
        CornerBasis cb = w.polygon.corner_basis(z);
        BigInt d = det2(cb.u, kT.apply(cb.v));
        if (!vertex) return {CornerKind::NonVertexOnLine, z, d, "line meets a straight top edge"};
        if (d == 1) return {CornerKind::HiddenDelzantCorner, z, d, ""};
        if (d == 0) return {CornerKind::FakeCorner, z, d, ""};
        return {CornerKind::Violation, z, d, "det(u,Tv) not in {0,1} at the top of a line"};
    }
    if (vertex) {
        CornerBasis cb = w.polygon.corner_basis(z);
        return {CornerKind::Violation, z, det2(cb.u, cb.v),
                "vertex on a cut line below the top boundary"};
    }
    return {CornerKind::Violation, z, 0, "boundary point on a line below the top"};
}

DelzantReport delzant_semitoric_report(const WeightedPolygon& w) {
    DelzantReport rep;
    WeightedPolygon n = w;
    if (!w.all_plus()) {
        try {
            n = act(GroupElement{w.signs, 0}, w);
        } catch (const Error&) {
            rep.failure = "sign normalization does not preserve convexity";
            return rep;
        }
    }
    rep.a1_ok = !n.polygon.has_vertical_recession();
    if (!rep.a1_ok) {
        rep.failure = "(a1) fails: some vertical slice is unbounded";
        return rep;
    }
    rep.a2_ok = true;
    rep.ok = true;
    std::vector<Pt> tops;
    for (const auto& l : n.lines) {
        VerticalSlice s = n.polygon.vertical_slice(l);
        if (!s.compact()) {
            rep.a2_ok = false;
            rep.ok = false;
            rep.failure = "(a2) fails at x = " + rat_to_string(l);
            return rep;
        }
        tops.push_back(s.top);
    }
    for (const auto& t : tops) {
        CornerClass c = classify_corner(n, t);
        bool good = c.kind == CornerKind::HiddenDelzantCorner || c.kind == CornerKind::FakeCorner;
        if (!good && rep.failure.empty())
            rep.failure = std::string(corner_kind_name(c.kind)) + " at " + pt_to_string(c.z);
        rep.ok = rep.ok && good;
        rep.corners.push_back(std::move(c));
    }
    for (const auto& v : n.polygon.vertices()) {
        if (std::find(tops.begin(), tops.end(), v) != tops.end()) continue;
        CornerClass c = classify_corner(n, v);
        if (c.kind != CornerKind::DelzantCorner && rep.failure.empty())
            rep.failure = std::string(corner_kind_name(c.kind)) + " at " + pt_to_string(c.z);
        rep.ok = rep.ok && c.kind == CornerKind::DelzantCorner;
        rep.corners.push_back(std::move(c));
    }
    return rep;
}

bool is_delzant_semitoric(const WeightedPolygon& w) { return delzant_semitoric_report(w).ok; }

bool is_admissible(const WeightedPolygon& w) {
    const size_t s = w.complexity();
    if (s > 16) fail(ErrorCode::ComplexityTooLarge, "complexity above the brute-force cap");
    for (size_t mask = 1; mask < (size_t(1) << s); ++mask) {
        std::vector<int> flips(s, 1);
        for (size_t j = 0; j < s; ++j)
            if (mask & (size_t(1) << j)) flips[j] = -1;
        if (!w.polygon.is_convex_image(flip_shear(w, flips))) return false;
    }
    return true;
}

namespace {

// Shear exponents k with T^k possibly mapping a onto b; 0 is always tried.
std::set<BigInt> shear_candidates(const RationalPolygon& a, const RationalPolygon& b) {
    std::set<BigInt> ks = {BigInt(0)};
    if (a.kind() != b.kind()) return ks;
    if (a.kind() == RationalPolygon::Kind::Strip) {
        const VecZ2& d1 = a.strip_dir();
        const VecZ2& d2 = b.strip_dir();
        if (d1.x != 0 && d1.x == d2.x && (d2.y - d1.y) % d1.x == 0)
            ks.insert((d2.y - d1.y) / d1.x);
        return ks;
    }
    const Pt* va = nullptr;
    for (const auto& v : a.vertices())
        if (v.x != 0 && (!va || lex_less(v, *va))) va = &v;
    if (va) {
        for (const auto& vb : b.vertices()) {
            if (vb.x != va->x) continue;
            Rational k = (vb.y - va->y) / va->x;
            if (den(k) == 1) ks.insert(num(k));
        }
        return ks;
    }
    // all vertices on x = 0: solve from a ray direction instead
    if (a.kind() == RationalPolygon::Kind::Chain) {
        for (auto [d1, d2] : {std::pair{a.ray_in(), b.ray_in()}, {a.ray_out(), b.ray_out()}}) {
            if (d1.x != 0 && d1.x == d2.x && (d2.y - d1.y) % d1.x == 0)
                ks.insert((d2.y - d1.y) / d1.x);
        }
    }
    return ks;
}

bool shear_matches(const RationalPolygon& a, const RationalPolygon& b, const BigInt& k) {
    if (k == 0) return a == b;
    return a.map_affine(AffineMapZ::global_shear(k)) == b;
}

} // namespace

bool orbits_equal(const WeightedPolygon& a, const WeightedPolygon& b) {
    if (a.complexity() != b.complexity()) return false;
    if (a.lines != b.lines) return false;
    GroupElement g;
    g.sign_flips.resize(a.complexity());
    for (size_t j = 0; j < a.complexity(); ++j) g.sign_flips[j] = a.signs[j] * b.signs[j];
    g.shear = 0;
    RationalPolygon na = a.polygon;
    try {
        na = act(g, a).polygon;
    } catch (const Error&) {
        return false;
    }
    for (const auto& k : shear_candidates(na, b.polygon))
        if (shear_matches(na, b.polygon, k)) return true;
    return false;
}

bool pondered_orbits_equal(const PonderedWeightedPolygon& a, const PonderedWeightedPolygon& b) {
    if (a.base.complexity() != b.base.complexity()) return false;
    if (a.base.lines != b.base.lines) return false;
    const size_t s = a.base.complexity();
    if (s == 0) return orbits_equal(a.base, b.base);
    BigInt k = b.indices[0] - a.indices[0];
    for (size_t j = 0; j < s; ++j)
        if (b.indices[j] - a.indices[j] != k) return false;
    GroupElement g;
    g.sign_flips.resize(s);
    for (size_t j = 0; j < s; ++j) g.sign_flips[j] = a.base.signs[j] * b.base.signs[j];
    g.shear = k;
    try {
        return act(g, a.base) == b.base;
    } catch (const Error&) {
        return false;
    }
}

namespace {

// Shear exponent normalizing the s = 0 representative. The anchor is the
// leftmost-then-lowest vertex, which is stable under every T^k.
BigInt geometric_normal_shear(const RationalPolygon& p) {
    if (p.kind() == RationalPolygon::Kind::Strip) {
        const VecZ2& d = p.strip_dir();
        if (d.x == 0) return 0; // vertical strip: T^k acts trivially
        BigInt bp = mod_pos(d.y, abs(d.x));
        return (bp - d.y) / d.x;
    }
    const auto& vs = p.vertices();
    size_t ai = 0;
    for (size_t i = 1; i < vs.size(); ++i)
        if (lex_less(vs[i], vs[ai])) ai = i;
    VecZ2 d;
    if (p.kind() == RationalPolygon::Kind::Compact) {
        d = primitive_direction(vs[ai], vs[(ai + 1) % vs.size()]);
        if (d.x == 0) d = primitive_direction(vs[(ai + vs.size() - 1) % vs.size()], vs[ai]);
    } else {
        d = (ai + 1 < vs.size()) ? primitive_direction(vs[ai], vs[ai + 1]) : p.ray_out();
        if (d.x == 0) d = (ai > 0) ? primitive_direction(vs[ai - 1], vs[ai]) : -p.ray_in();
    }
    if (d.x == 0) fail(ErrorCode::NotCanonicalizable, "no usable non-vertical edge at the anchor");
    BigInt bp = mod_pos(d.y, abs(d.x));
    return (bp - d.y) / d.x;
}

} // namespace

PonderedWeightedPolygon canonical_form(const PonderedWeightedPolygon& pw) {
    if (!is_admissible(pw.base)) fail(ErrorCode::NotAdmissible, "base polygon not admissible");
    GroupElement flip{pw.base.signs, 0};
    PonderedWeightedPolygon plus = act_pondered(flip, pw);
    BigInt k;
    if (pw.base.complexity() >= 1)
        k = -plus.indices[0];
    else
        k = geometric_normal_shear(plus.base.polygon);
    if (k == 0) return plus;
    return act_pondered(GroupElement{std::vector<int>(pw.base.complexity(), 1), k}, plus);
}

Rational slice_length(const WeightedPolygon& w, size_t j) {
    if (j >= w.complexity()) fail(ErrorCode::InvalidArgument, "line index out of range");
    VerticalSlice s = w.polygon.vertical_slice(w.lines[j]);
    if (!s.compact()) fail(ErrorCode::UnboundedSlice, "slice at line " + std::to_string(j));
    return s.length();
}

bool validate_height(const WeightedPolygon& w, size_t j, const Rational& h) {
    Rational len = slice_length(w, j);
    return Rational(0) < h && h < len;
}

} // namespace semitoric
