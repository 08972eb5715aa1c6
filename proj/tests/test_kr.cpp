#include "moykr/kr.hpp"

#include <doctest.h>

#include <algorithm>

using namespace moykr;

namespace {

using B = BasisMor;

ShiftedAtom id2(int s) { return {Atom::Id2, s}; }
ShiftedAtom sg(int s) { return {Atom::S, s}; }

// The reduced torus complex written out directly: id2 -chi0-> S{1} -alpha-> S{3} -gamma-> ...
void check_zigzag_shape(const KRComplex& c, int k, int n)
{
    int s = (n - 1) * k;
    REQUIRE(c.objects.size() == static_cast<std::size_t>(k + 1));
    CHECK(c.at(0) == std::vector<ShiftedAtom>{id2(s)});
    for (int i = 1; i <= k; ++i) CHECK(c.at(i) == std::vector<ShiftedAtom>{sg(s + 2 * i - 1)});
    CHECK(c.entry(0, 0, 0) == Mor(B::Chi0));
    for (int i = 1; i < k; ++i) CHECK(c.entry(i, 0, 0) == Mor(i % 2 ? B::Alpha : B::Gamma));
}

}  // namespace

TEST_SUITE("kr") {

TEST_CASE("composition table")
{
    const B all[] = {B::One, B::Chi0, B::Chi1, B::Alpha, B::Gamma};
    for (B m : all) {
        CHECK(compose_basis(B::One, m) == m);
        CHECK(compose_basis(m, B::One) == m);
    }
    CHECK(compose_basis(B::Chi1, B::Chi0) == std::nullopt);
    CHECK(compose_basis(B::Chi0, B::Chi1) == B::Alpha);
    CHECK(compose_basis(B::Alpha, B::Chi0) == std::nullopt);
    CHECK(compose_basis(B::Chi1, B::Alpha) == std::nullopt);
    CHECK(compose_basis(B::Gamma, B::Alpha) == std::nullopt);
    CHECK(compose_basis(B::Alpha, B::Gamma) == std::nullopt);
    CHECK(compose_basis(B::Alpha, B::Alpha) == std::nullopt);
    CHECK_THROWS_AS(compose_basis(B::Gamma, B::Chi0), UndefinedComposite);
    CHECK_THROWS_AS(compose_basis(B::Chi1, B::Gamma), UndefinedComposite);
    CHECK_THROWS_AS(compose_basis(B::Gamma, B::Gamma), UndefinedComposite);
}

TEST_CASE("table is consistent with alpha = chi0 chi1 and chi1 chi0 = 0")
{
    // alpha chi0 = chi0 chi1 chi0 = 0, chi1 alpha = chi1 chi0 chi1 = 0, alpha alpha = chi0 (chi1 chi0) chi1 = 0.
    Mor a = compose(Mor(B::Chi0), Mor(B::Chi1));
    CHECK(a == Mor(B::Alpha));
    CHECK(compose(a, Mor(B::Chi0)) == compose(Mor(B::Chi0), compose(Mor(B::Chi1), Mor(B::Chi0))));
    CHECK(compose(Mor(B::Chi1), a) == compose(compose(Mor(B::Chi1), Mor(B::Chi0)), Mor(B::Chi1)));
    CHECK(compose(a, a).is_zero());
}

TEST_CASE("degrees and endpoints")
{
    CHECK(qdeg(B::One) == 0);
    CHECK(qdeg(B::Chi0) == 1);
    CHECK(qdeg(B::Chi1) == 1);
    CHECK(qdeg(B::Alpha) == 2);
    CHECK(qdeg(B::Gamma) == 2);
    CHECK(source_atom(B::Chi0) == Atom::Id2);
    CHECK(target_atom(B::Chi0) == Atom::S);
    CHECK(source_atom(B::Chi1) == Atom::S);
    CHECK(target_atom(B::Chi1) == Atom::Id2);
    CHECK(source_atom(B::One) == std::nullopt);
    for (B m : {B::Alpha, B::Gamma}) {
        CHECK(source_atom(m) == Atom::S);
        CHECK(target_atom(m) == Atom::S);
    }
}

TEST_CASE("linear combinations")
{
    Mor x = Mor(B::Alpha, 2) + Mor(B::Gamma, -1);
    CHECK((x - x).is_zero());
    CHECK((x * Rational(0)).is_zero());
    Mor y = Mor(B::Alpha, 2) + Mor(B::One, -1);
    CHECK(compose(y, Mor(B::Chi0, 3)) == Mor(B::Chi0, -3));
    CHECK(compose(Mor(B::Chi1), y) == Mor(B::Chi1, -1));
    CHECK_THROWS_AS(compose(x, Mor(B::Chi0)), UndefinedComposite);
    CHECK(Mor(B::One, -2).unit_coefficient() == Rational(-2));
    CHECK_FALSE(x.unit_coefficient().has_value());
}

TEST_CASE("crossing complexes")
{
    KRComplex p = sigma_complex(+1, 2);
    CHECK(p.at(0) == std::vector<ShiftedAtom>{id2(1)});
    CHECK(p.at(1) == std::vector<ShiftedAtom>{sg(2)});
    CHECK(p.entry(0, 0, 0) == Mor(B::Chi0));
    for (int n = 2; n <= 6; ++n) {
        KRComplex m = sigma_complex(-1, n);
        CHECK(m.at(-1) == std::vector<ShiftedAtom>{sg(-n)});
        CHECK(m.at(0) == std::vector<ShiftedAtom>{id2(1 - n)});
        CHECK(qdeg(B::Chi1) == (1 - n) - (-n));
        CHECK_NOTHROW(m.validate());
        CHECK(m.d_squared_zero());
        CHECK(sigma_complex(+1, n).d_squared_zero());
    }
}

TEST_CASE("validation rejects inhomogeneous entries")
{
    KRComplex c;
    c.objects[0] = {id2(0)};
    c.objects[1] = {sg(0)};
    c.d[0] = {{Mor(B::Chi0)}};
    CHECK_THROWS_AS(c.validate(), std::logic_error);
    c.objects[1] = {id2(1)};
    CHECK_THROWS_AS(c.validate(), std::logic_error);
}

TEST_CASE("composition before splitting")
{
    for (int n = 2; n <= 5; ++n) {
        ComposedComplex u = compose_unsplit(sigma_complex(+1, n), sigma_complex(+1, n));
        REQUIRE(u.objects.size() == 3);
        CHECK(u.objects.at(0).size() == 1);
        CHECK(u.objects.at(0)[0].shift() == 2 * (n - 1));
        REQUIRE(u.objects.at(1).size() == 2);
        for (const auto& p : u.objects.at(1)) CHECK(p.shift() == 2 * n - 1);
        REQUIRE(u.objects.at(2).size() == 1);
        CHECK(u.objects.at(2)[0].shift() == 2 * n);
        CHECK(u.objects.at(2)[0].is_ss());
        CHECK(u.d_squared_zero());

        ComposedComplex r2 = compose_unsplit(sigma_complex(+1, n), sigma_complex(-1, n));
        CHECK(r2.d_squared_zero());
        KRComplex split = split_ss(r2);
        CHECK(split.d_squared_zero());
        std::vector<ShiftedAtom> mid = split.at(0);
        std::sort(mid.begin(), mid.end());
        CHECK(mid == std::vector<ShiftedAtom>{id2(0), sg(-1), sg(1)});
    }
}

TEST_CASE("unit law")
{
    for (int n = 2; n <= 4; ++n) {
        CHECK(compose(sigma_complex(+1, n), identity_complex()) == sigma_complex(+1, n));
        CHECK(compose(identity_complex(), sigma_complex(+1, n)) == sigma_complex(+1, n));
    }
}

TEST_CASE("splitting never leaves SS atoms")
{
    for (int n = 2; n <= 4; ++n) {
        KRComplex c = sigma_complex(+1, n);
        for (int k = 2; k <= 6; ++k) {
            ComposedComplex u = compose_unsplit(sigma_complex(+1, n), c);
            KRComplex s = split_ss(u);
            CHECK_NOTHROW(s.validate());
            CHECK(s.d_squared_zero());
            std::size_t ss = 0;
            for (const auto& [deg, obj] : u.objects) ss += std::count_if(obj.begin(), obj.end(), [](const PairAtom& p) { return p.is_ss(); });
            CHECK(s.total_summands() == c.total_summands() * 2 + ss);
            c = gaussian_eliminate(s);
        }
    }
}

TEST_CASE("entries with no splitting rule are rejected")
{
    ComposedComplex u;
    u.objects[0] = {PairAtom{sg(0), sg(0)}};
    u.objects[1] = {PairAtom{sg(2), sg(0)}};
    u.d[0] = {{PairMor{{{B::Gamma, B::One}, Rational(1)}}}};
    CHECK_THROWS_AS(split_ss(u), UnsplittableEntry);
}

TEST_CASE("elimination of an isomorphism")
{
    KRComplex c;
    c.objects[0] = {sg(3)};
    c.objects[1] = {sg(3)};
    c.d[0] = {{Mor(B::One, 5)}};
    KRComplex r = gaussian_eliminate(c);
    CHECK(r.objects.empty());
    CHECK(r.render() == "0\n");
}

TEST_CASE("elimination applies the correction term")
{
    KRComplex c;
    c.objects[0] = {id2(0), id2(0)};
    c.objects[1] = {id2(0), sg(1)};
    c.d[0] = {{Mor(B::One), Mor(B::One)}, {Mor(B::Chi0), Mor()}};
    REQUIRE_NOTHROW(c.validate());
    KRComplex r = gaussian_eliminate(c);
    CHECK(r.at(0) == std::vector<ShiftedAtom>{id2(0)});
    CHECK(r.at(1) == std::vector<ShiftedAtom>{sg(1)});
    CHECK(r.entry(0, 0, 0) == Mor(B::Chi0, -1));
    CHECK(normalize_signs(r).entry(0, 0, 0) == Mor(B::Chi0));
}

TEST_CASE("second Reidemeister move")
{
    for (int n = 2; n <= 6; ++n) {
        for (auto order : {PivotOrder::LeftmostFirst, PivotOrder::RightmostFirst}) {
            KRComplex r = gaussian_eliminate(split_ss(compose_unsplit(sigma_complex(+1, n), sigma_complex(-1, n))), order);
            CHECK(r == identity_complex());
        }
    }
}

TEST_CASE("Hopf elimination")
{
    for (int n = 2; n <= 5; ++n) {
        KRComplex r = normalize_signs(gaussian_eliminate(compose(sigma_complex(+1, n), sigma_complex(+1, n))));
        check_zigzag_shape(r, 2, n);
        CHECK(r == zigzag_complex(2, n));
    }
}

TEST_CASE("torus complexes reach the zigzag normal form")
{
    for (int n = 2; n <= 6; ++n) {
        check_zigzag_shape(torus2_complex(1, n), 1, n);
        for (int k = 1; k <= 12; ++k) {
            KRComplex c;
            REQUIRE_NOTHROW(c = torus2_complex(k, n));
            check_zigzag_shape(c, k, n);
            CHECK(c == zigzag_complex(k, n));
            CHECK(c.d_squared_zero());
        }
    }
    CHECK(torus2_complex(0, 3) == identity_complex());
}

TEST_CASE("every pipeline stage is checked")
{
    for (int k = 1; k <= 9; ++k) {
        int stages = 0;
        PipelineOptions opts;
        opts.stages_checked = &stages;
        torus2_complex(k, 3, opts);
        CHECK(stages == 3 * (k - 1));
    }
}

TEST_CASE("pivot order does not change the result")
{
    PipelineOptions right;
    right.order = PivotOrder::RightmostFirst;
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 8; ++k) {
            KRComplex a = torus2_complex(k, n), b = torus2_complex(k, n, right);
            CHECK(same_objects(a, b));
        }
    for (int n = 2; n <= 4; ++n) {
        KRComplex s = compose(sigma_complex(+1, n), torus2_complex(3, n));
        CHECK(same_objects(gaussian_eliminate(s, PivotOrder::LeftmostFirst),
                           gaussian_eliminate(s, PivotOrder::RightmostFirst)));
    }
}

TEST_CASE("shifts")
{
    KRComplex c = shifted(sigma_complex(+1, 3), 4);
    CHECK(c.at(0) == std::vector<ShiftedAtom>{id2(6)});
    CHECK(c.at(1) == std::vector<ShiftedAtom>{sg(7)});
    CHECK(to_string(sg(-2)) == "S{-2}");
    CHECK(to_string(id2(0)) == "Id2{0}");
}

TEST_CASE("rendering")
{
    CHECK(zigzag_complex(2, 2).render() == "deg 0: Id2{2}\n  d0 = [chi0]\ndeg 1: S{3}\n  d1 = [alpha]\ndeg 2: S{5}\n");
}

}  // TEST_SUITE
