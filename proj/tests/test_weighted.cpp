#include <doctest.h>

#include "fixtures.hpp"
#include "semitoric/weighted_polygon.hpp"

using namespace semitoric;
using fixtures::pt;
using fixtures::ptq;

TEST_CASE("weighted polygon invariants") {
    CHECK_THROWS_AS(WeightedPolygon(fixtures::fix_fake(), {Rational(0)}, {1}), Error);
    CHECK_THROWS_AS(WeightedPolygon(fixtures::fix_fake(), {Rational(2)}, {1}), Error);
    CHECK_THROWS_AS(
        WeightedPolygon(fixtures::fix_fake(), {Rational(1), Rational(1)}, {1, 1}), Error);
    CHECK_THROWS_AS(WeightedPolygon(fixtures::fix_fake(), {Rational(1)}, {2}), Error);
    // unbounded x-range: outer bounds vacuous
    WeightedPolygon hw(fixtures::half_strip(), {Rational(10)}, {1});
    CHECK(hw.complexity() == 1);
}

TEST_CASE("classify_corner on the fixtures") {
    WeightedPolygon ff = fixtures::fix_fake_weighted();
    CornerClass fake = classify_corner(ff, pt(1, 1));
    CHECK(fake.kind == CornerKind::FakeCorner);
    CHECK(fake.det == 0);

    WeightedPolygon hid = fixtures::hidden_weighted();
    CornerClass hidden = classify_corner(hid, pt(1, 2));
    CHECK(hidden.kind == CornerKind::HiddenDelzantCorner);
    CHECK(hidden.det == 1);

    WeightedPolygon tri(fixtures::triangle(), {}, {});
    CHECK(classify_corner(tri, pt(0, 0)).kind == CornerKind::DelzantCorner);

    WeightedPolygon half(fixtures::fix_fake(), {make_rational(1, 2)}, {1});
    CHECK(classify_corner(half, ptq(1, 2, 1, 1)).kind == CornerKind::NonVertexOnLine);

    WeightedPolygon neg(fixtures::fix_fake(), {Rational(1)}, {-1});
    CHECK_THROWS_AS(classify_corner(neg, pt(1, 1)), Error);
}

TEST_CASE("is_delzant_semitoric") {
    CHECK(is_delzant_semitoric(fixtures::fix_fake_weighted()));
    CHECK(is_delzant_semitoric(fixtures::hidden_weighted()));
    CHECK(is_delzant_semitoric(fixtures::double_fake_weighted()));
    CHECK(is_delzant_semitoric(fixtures::triple_fake_weighted()));
    CHECK(is_delzant_semitoric(WeightedPolygon(fixtures::triangle(), {}, {})));
    CHECK(is_delzant_semitoric(WeightedPolygon(fixtures::unbounded_fake(), {Rational(1)}, {1})));

    // line through a straight stretch of the top edge
    CHECK(!is_delzant_semitoric(WeightedPolygon(fixtures::fix_fake(), {make_rational(1, 2)}, {1})));

    // the sign-flipped representative of FIX-FAKE is still Delzant semitoric
    RationalPolygon flipped =
        RationalPolygon::from_points({pt(0, 0), pt(1, 0), pt(2, 1), pt(0, 1)});
    CHECK(is_delzant_semitoric(WeightedPolygon(flipped, {Rational(1)}, {-1})));

    // vertical strip: (a1) fails
    RationalPolygon vstrip = RationalPolygon::strip(VecZ2{0, 1}, Rational(-2), Rational(-1));
    DelzantReport rep = delzant_semitoric_report(WeightedPolygon(vstrip, {}, {}));
    CHECK(!rep.ok);
    CHECK(!rep.a1_ok);

    DelzantReport good = delzant_semitoric_report(fixtures::fix_fake_weighted());
    CHECK(good.ok);
    CHECK(good.corners.size() == 4);
    int fakes = 0, delzants = 0;
    for (const auto& c : good.corners) {
        fakes += c.kind == CornerKind::FakeCorner;
        delzants += c.kind == CornerKind::DelzantCorner;
    }
    CHECK(fakes == 1);
    CHECK(delzants == 3);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(fixtures::fix_fake_weighted()));
    CHECK(is_admissible(WeightedPolygon(fixtures::triangle(), {}, {})));
    CHECK(!is_admissible(WeightedPolygon(fixtures::unit_square_centered(), {Rational(0)}, {1})));
}

TEST_CASE("delzant semitoric implies brute-force admissible") {
    for (const auto& w : fixtures::admissible_corpus()) {
        if (is_delzant_semitoric(w)) CHECK(is_admissible(w));
    }
}

TEST_CASE("act") {
    WeightedPolygon ff = fixtures::fix_fake_weighted();
    WeightedPolygon flipped = act(GroupElement{{-1}, 0}, ff);
    // top straightens at the fake corner, bottom bends at (1,0)
    CHECK(flipped.polygon ==
          RationalPolygon::from_points({pt(0, 0), pt(1, 0), pt(2, 1), pt(0, 1)}));
    CHECK(flipped.polygon.vertices().size() == 4);
    CHECK(!flipped.polygon.is_vertex(pt(1, 1)));
    CHECK(flipped.signs == std::vector<int>{-1});
    CHECK(flipped.lines == ff.lines);
    // double flip returns the original
    CHECK(act(GroupElement{{-1}, 0}, flipped) == ff);

    CHECK(act(GroupElement::identity(1), ff) == ff);

    WeightedPolygon sheared = act(GroupElement{{1}, 1}, ff);
    CHECK(sheared.polygon ==
          RationalPolygon::from_points({pt(0, 0), pt(2, 2), pt(1, 2), pt(0, 1)}));

    CHECK_THROWS_AS(act(GroupElement{{-1}, 0},
                        WeightedPolygon(fixtures::unit_square_centered(), {Rational(0)}, {1})),
                    Error);
}

TEST_CASE("act group law") {
    fixtures::Rng rng(101);
    auto corpus = fixtures::admissible_corpus();
    int done = 0;
    while (done < 200) {
        const WeightedPolygon& w = corpus[rng.pick(0, long(corpus.size()) - 1)];
        GroupElement g1 = rng.group_element(w.complexity());
        GroupElement g2 = rng.group_element(w.complexity());
        WeightedPolygon lhs = act(g2, act(g1, w));
        WeightedPolygon rhs = act(g2.compose(g1), w);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("act preserves lines and slice lengths") {
    fixtures::Rng rng(55);
    auto corpus = fixtures::admissible_corpus();
    for (int trial = 0; trial < 100; ++trial) {
        const WeightedPolygon& w = corpus[rng.pick(0, long(corpus.size()) - 1)];
        if (w.complexity() == 0) continue;
        GroupElement g = rng.group_element(w.complexity());
        WeightedPolygon img = act(g, w);
        CHECK(img.lines == w.lines);
        for (size_t j = 0; j < w.complexity(); ++j)
            CHECK(slice_length(img, j) == slice_length(w, j));
    }
}

TEST_CASE("delzant property is constant on orbits") {
    fixtures::Rng rng(77);
    for (const auto& w : fixtures::admissible_corpus()) {
        if (!is_delzant_semitoric(w)) continue;
        for (int trial = 0; trial < 20; ++trial) {
            GroupElement g = rng.group_element(w.complexity());
            CHECK(is_delzant_semitoric(act(g, w)));
        }
    }
}

TEST_CASE("flip semantics at cut tops") {
    // flipping the sign over a fake corner removes the vertex
    WeightedPolygon ff = fixtures::fix_fake_weighted();
    WeightedPolygon ffm = act(GroupElement{{-1}, 0}, ff);
    CHECK(!ffm.polygon.is_vertex(pt(1, 1)));

    // flipping over a hidden Delzant corner turns it into a Delzant corner
    WeightedPolygon hid = fixtures::hidden_weighted();
    WeightedPolygon him = act(GroupElement{{-1}, 0}, hid);
    Pt top = pt(1, 2); // fixed by its own cut shear
    CHECK(him.polygon.is_vertex(top));
    CornerBasis cb = him.polygon.corner_basis(top);
    CHECK(det2(cb.u, cb.v) == 1);
}

TEST_CASE("orbits_equal") {
    WeightedPolygon ff = fixtures::fix_fake_weighted();
    CHECK(orbits_equal(ff, act(GroupElement{{-1}, 0}, ff)));
    CHECK(orbits_equal(ff, act(GroupElement{{1}, 2}, ff)));
    CHECK(orbits_equal(ff, ff));

    // different lines never equal
    WeightedPolygon other(fixtures::hidden_fixture(), {Rational(1)}, {1});
    CHECK(!orbits_equal(ff, other));

    // translate vertically: not in the orbit (T^k fixes x = 0 column)
    WeightedPolygon shifted(fixtures::fix_fake().translate(pt(0, 3)), {Rational(1)}, {1});
    CHECK(!orbits_equal(ff, shifted));
}

TEST_CASE("pondered orbits and star action") {
    PonderedWeightedPolygon p0(fixtures::fix_fake_weighted(), {BigInt(0)});
    PonderedWeightedPolygon p3 = act_pondered(GroupElement{{1}, 3}, p0);
    CHECK(p3.indices == std::vector<BigInt>{BigInt(3)});
    CHECK(pondered_orbits_equal(p0, p3));

    // sign flip leaves indices alone
    PonderedWeightedPolygon p5(fixtures::fix_fake_weighted(), {BigInt(5)});
    PonderedWeightedPolygon p5f = act_pondered(GroupElement{{-1}, 0}, p5);
    CHECK(p5f.indices == std::vector<BigInt>{BigInt(5)});

    // index mismatch with forced identity shear
    PonderedWeightedPolygon q1(fixtures::fix_fake_weighted(), {BigInt(1)});
    CHECK(!pondered_orbits_equal(p0, q1));
}

TEST_CASE("canonical_form") {
    // flipped representative of FIX-FAKE, with index 2
    RationalPolygon flipped =
        RationalPolygon::from_points({pt(0, 0), pt(1, 0), pt(2, 1), pt(0, 1)});
    PonderedWeightedPolygon pw(WeightedPolygon(flipped, {Rational(1)}, {-1}), {BigInt(2)});
    PonderedWeightedPolygon cf = canonical_form(pw);
    CHECK(cf.base.signs == std::vector<int>{1});
    CHECK(cf.indices == std::vector<BigInt>{BigInt(0)});
    CHECK(cf.base.polygon ==
          fixtures::fix_fake().map_affine(AffineMapZ::global_shear(-2)));

    // idempotence
    CHECK(canonical_form(cf) == cf);

    PonderedWeightedPolygon notadm(
        WeightedPolygon(fixtures::unit_square_centered(), {Rational(0)}, {1}), {BigInt(0)});
    CHECK_THROWS_AS(canonical_form(notadm), Error);
}

TEST_CASE("canonical_form is constant on orbits") {
    fixtures::Rng rng(31337);
    auto corpus = fixtures::admissible_corpus();
    for (const auto& w : corpus) {
        std::vector<BigInt> ks;
        for (size_t j = 0; j < w.complexity(); ++j) ks.push_back(rng.pick(-3, 3));
        PonderedWeightedPolygon pw(w, ks);
        PonderedWeightedPolygon base = canonical_form(pw);
        for (int trial = 0; trial < 20; ++trial) {
            GroupElement g = rng.group_element(w.complexity());
            CHECK(canonical_form(act_pondered(g, pw)) == base);
        }
    }
}

TEST_CASE("pondered orbit equality matches canonical form equality") {
    fixtures::Rng rng(999);
    auto corpus = fixtures::admissible_corpus();
    int trials = 0;
    while (trials < 100) {
        const WeightedPolygon& w = corpus[rng.pick(0, long(corpus.size()) - 1)];
        std::vector<BigInt> ks;
        for (size_t j = 0; j < w.complexity(); ++j) ks.push_back(rng.pick(-2, 2));
        PonderedWeightedPolygon a(w, ks);
        PonderedWeightedPolygon b = act_pondered(rng.group_element(w.complexity()), a);
        bool perturb = rng.pick(0, 1) == 1 && w.complexity() > 0;
        if (perturb) {
            auto ks2 = b.indices;
            ks2[size_t(rng.pick(0, long(ks2.size()) - 1))] += rng.pick(1, 2);
            b = PonderedWeightedPolygon(b.base, ks2);
        }
        bool eq = pondered_orbits_equal(a, b);
        bool cf = canonical_form(a) == canonical_form(b);
        CHECK(eq == cf);
        if (perturb) CHECK(!eq);
        ++trials;
    }
}

TEST_CASE("orbit equality is an equivalence on a fixture corpus") {
    fixtures::Rng rng(4242);
    auto corpus = fixtures::admissible_corpus();
    std::vector<WeightedPolygon> members;
    for (const auto& w : corpus)
        for (int i = 0; i < 3; ++i) members.push_back(act(rng.group_element(w.complexity()), w));
    for (const auto& a : members) CHECK(orbits_equal(a, a));
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            bool ab = orbits_equal(members[i], members[j]);
            bool ba = orbits_equal(members[j], members[i]);
            CHECK(ab == ba);
        }
}

TEST_CASE("slice length and heights") {
    WeightedPolygon ff = fixtures::fix_fake_weighted();
    CHECK(slice_length(ff, 0) == 1);
    CHECK(validate_height(ff, 0, make_rational(1, 2)));
    CHECK(!validate_height(ff, 0, Rational(1)));
    CHECK(!validate_height(ff, 0, Rational(0)));

    RationalPolygon vstrip = RationalPolygon::strip(VecZ2{0, 1}, Rational(-3), Rational(-1));
    WeightedPolygon vsw(vstrip, {Rational(2)}, {1});
    CHECK_THROWS_AS(slice_length(vsw, 0), Error);
}
