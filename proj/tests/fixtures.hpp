#pragma once

#include <random>
#include <vector>

#include "semitoric/ingredients.hpp"
#include "semitoric/weighted_polygon.hpp"

namespace fixtures {

using namespace semitoric;

inline Pt pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Pt ptq(long xn, long xd, long yn, long yd) {
    return {make_rational(xn, xd), make_rational(yn, yd)};
}

// hull{(0,0),(2,0),(1,1),(0,1)}: fake corner at (1,1) over the line x=1.
inline RationalPolygon fix_fake() {
    return RationalPolygon::from_points({pt(0, 0), pt(2, 0), pt(1, 1), pt(0, 1)});
}

inline WeightedPolygon fix_fake_weighted() {
    return WeightedPolygon(fix_fake(), {Rational(1)}, {1});
}

// hull{(0,0),(3,0),(1,2),(0,1)}: hidden Delzant corner at (1,2) over x=1.
inline RationalPolygon hidden_fixture() {
    return RationalPolygon::from_points({pt(0, 0), pt(3, 0), pt(1, 2), pt(0, 1)});
}

inline WeightedPolygon hidden_weighted() {
    return WeightedPolygon(hidden_fixture(), {Rational(1)}, {1});
}

inline RationalPolygon triangle() {
    return RationalPolygon::from_points({pt(0, 0), pt(1, 0), pt(0, 1)});
}

inline RationalPolygon unit_square_centered() {
    return RationalPolygon::from_points(
        {ptq(-1, 2, -1, 2), ptq(1, 2, -1, 2), ptq(1, 2, 1, 2), ptq(-1, 2, 1, 2)});
}

// {x >= 0, 0 <= y <= 1}
inline RationalPolygon half_strip() {
    return RationalPolygon::from_points({pt(0, 0), pt(0, 1)}, {VecZ2{1, 0}});
}

// Unbounded to the left, fake corner at (1,1) over x=1.
inline RationalPolygon unbounded_fake() {
    return RationalPolygon::chain_with_rays({pt(2, 0), pt(1, 1)}, VecZ2{-1, 0}, VecZ2{-1, 0});
}

// m_f = 2, fake corners at (1,2) and (3,2).
inline RationalPolygon double_fake() {
    return RationalPolygon::from_points({pt(0, 0), pt(5, 0), pt(3, 2), pt(1, 2), pt(0, 1)});
}

inline WeightedPolygon double_fake_weighted() {
    return WeightedPolygon(double_fake(), {Rational(1), Rational(3)}, {1, 1});
}

// m_f = 3, fake corners at (2,3), (4,3), (6,1).
inline RationalPolygon triple_fake() {
    return RationalPolygon::from_points({pt(0, -1), ptq(13, 2, -1, 1), ptq(13, 2, 0, 1),
                                         pt(6, 1), pt(4, 3), pt(2, 3), pt(0, 1)});
}

inline WeightedPolygon triple_fake_weighted() {
    return WeightedPolygon(triple_fake(), {Rational(2), Rational(4), Rational(6)}, {1, 1, 1});
}

// Deterministic generator helpers for property tests.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    }
    Rational rational(long lo, long hi, long max_den = 4) {
        long d = pick(1, max_den);
        return make_rational(pick(lo * d, hi * d), d);
    }
    GroupElement group_element(size_t s, long kmax = 3) {
        GroupElement g;
        g.shear = pick(-kmax, kmax);
        g.sign_flips.resize(s);
        for (size_t i = 0; i < s; ++i) g.sign_flips[i] = pick(0, 1) ? 1 : -1;
        return g;
    }
};

inline TaylorSeries2 simple_series() {
    return TaylorSeries2(1, {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}});
}

// L0: FIX-FAKE, S = 2X + Y, h = 1/2, k = 0.
inline IngredientList l0() {
    return IngredientList{1,
                          {simple_series()},
                          PonderedWeightedPolygon(fix_fake_weighted(), {BigInt(0)}),
                          {make_rational(1, 2)}};
}

inline IngredientList hidden_list() {
    return IngredientList{1,
                          {simple_series()},
                          PonderedWeightedPolygon(hidden_weighted(), {BigInt(0)}),
                          {make_rational(1, 2)}};
}

inline IngredientList triangle_list() {
    return IngredientList{0, {}, PonderedWeightedPolygon(WeightedPolygon(triangle(), {}, {}), {}),
                          {}};
}

inline IngredientList half_strip_list() {
    return IngredientList{
        0, {}, PonderedWeightedPolygon(WeightedPolygon(half_strip(), {}, {}), {}), {}};
}

inline IngredientList unbounded_fake_list() {
    return IngredientList{
        1,
        {simple_series()},
        PonderedWeightedPolygon(WeightedPolygon(unbounded_fake(), {Rational(1)}, {1}),
                                {BigInt(0)}),
        {make_rational(1, 2)}};
}

inline IngredientList double_fake_list() {
    return IngredientList{2,
                          {simple_series(), simple_series()},
                          PonderedWeightedPolygon(double_fake_weighted(), {BigInt(0), BigInt(1)}),
                          {make_rational(1, 2), Rational(1)}};
}

inline IngredientList triple_fake_list() {
    return IngredientList{
        3,
        {simple_series(), simple_series(), simple_series()},
        PonderedWeightedPolygon(triple_fake_weighted(), {BigInt(0), BigInt(0), BigInt(0)}),
        {Rational(2), make_rational(3, 2), make_rational(1, 2)}};
}

inline std::vector<IngredientList> ingredient_corpus() {
    return {l0(),
            hidden_list(),
            triangle_list(),
            half_strip_list(),
            unbounded_fake_list(),
            double_fake_list(),
            triple_fake_list()};
}

// Admissible weighted fixtures for randomized suites.
inline std::vector<WeightedPolygon> admissible_corpus() {
    std::vector<WeightedPolygon> out;
    out.push_back(fix_fake_weighted());
    out.push_back(hidden_weighted());
    out.push_back(double_fake_weighted());
    out.push_back(triple_fake_weighted());
    out.push_back(WeightedPolygon(triangle(), {}, {}));
    out.push_back(WeightedPolygon(half_strip(), {}, {}));
    out.push_back(WeightedPolygon(unbounded_fake(), {Rational(1)}, {1}));
    return out;
}

} // namespace fixtures
