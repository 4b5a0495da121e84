#pragma once

#include <string>
#include <vector>

#include "semitoric/polygon.hpp"

namespace semitoric {

// Polygon with ordered vertical lines and cut signs. The line abscissas
// must be strictly increasing and strictly inside the x-range.
struct WeightedPolygon {
    RationalPolygon polygon;
    std::vector<Rational> lines;
    std::vector<int> signs;

    WeightedPolygon(RationalPolygon poly, std::vector<Rational> ls, std::vector<int> sg);

    size_t complexity() const { return lines.size(); }
    bool all_plus() const;

    bool operator==(const WeightedPolygon&) const = default;
};

struct PonderedWeightedPolygon {
    WeightedPolygon base;
    std::vector<BigInt> indices;

    PonderedWeightedPolygon(WeightedPolygon b, std::vector<BigInt> ks);

    bool operator==(const PonderedWeightedPolygon&) const = default;
};

// Element of G_s x G: per-cut sign flips and a global shear exponent.
struct GroupElement {
    std::vector<int> sign_flips;
    BigInt shear;

    static GroupElement identity(size_t s) { return {std::vector<int>(s, 1), 0}; }
    GroupElement compose(const GroupElement& other) const;
};

enum class CornerKind {
    DelzantCorner,
    HiddenDelzantCorner,
    FakeCorner,
    NonVertexOnLine,
    Violation,
};

const char* corner_kind_name(CornerKind k);

struct CornerClass {
    CornerKind kind;
    Pt z;
    // determinant actually evaluated (det(u,v) or det(u,Tv)); meaningless for
    // NonVertexOnLine at a straight edge only in the Violation-free cases.
    BigInt det;
    std::string reason;
};

struct DelzantReport {
    bool ok = false;
    bool a1_ok = false;
    bool a2_ok = false;
    std::vector<CornerClass> corners;
    std::string failure;
};

CornerClass classify_corner(const WeightedPolygon& w, const Pt& z);

DelzantReport delzant_semitoric_report(const WeightedPolygon& w);
bool is_delzant_semitoric(const WeightedPolygon& w);

// Brute force over all 2^s sign vectors; s capped at 16.
bool is_admissible(const WeightedPolygon& w);

WeightedPolygon act(const GroupElement& g, const WeightedPolygon& w);
PonderedWeightedPolygon act_pondered(const GroupElement& g, const PonderedWeightedPolygon& pw);

bool orbits_equal(const WeightedPolygon& a, const WeightedPolygon& b);
bool pondered_orbits_equal(const PonderedWeightedPolygon& a, const PonderedWeightedPolygon& b);

PonderedWeightedPolygon canonical_form(const PonderedWeightedPolygon& pw);

Rational slice_length(const WeightedPolygon& w, size_t j);
bool validate_height(const WeightedPolygon& w, size_t j, const Rational& h);

} // namespace semitoric
