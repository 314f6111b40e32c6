#include "f4gvm/errors.hpp"
#include "f4gvm/verma.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace f4gvm;

namespace {

// Oracle: closed forms (Lambda+rho, b^v) = c1 m1 + ... + c4 m4 with c the
// coefficients of b^v over the simple coroots, computed in the e-basis
// with the standard dot product.
std::array<Rational, 4> eps(const AlphaCoeffs& a) {
    return {Rational(a[3], 2), Rational(a[0]) - Rational(a[3], 2), Rational(a[1] - a[0]) - Rational(a[3], 2),
            Rational(a[2] - a[1]) - Rational(a[3], 2)};
}

Rational dot(const std::array<Rational, 4>& u, const std::array<Rational, 4>& v) {
    Rational s;
    for (int i = 0; i < 4; ++i) s += u[i] * v[i];
    return s;
}

// (Lambda+rho) in e-coordinates from the labels, by solving the four
// simple-root conditions directly: m1 = x2-x3, m2 = x3-x4, m3 = 2x4,
// m4 = x1-x2-x3-x4.
std::array<Rational, 4> shifted_eps(const ConcreteLabels& m) {
    const Rational x4 = Rational(m[2], 2);
    const Rational x3 = Rational(m[1]) + x4;
    const Rational x2 = Rational(m[0]) + x3;
    const Rational x1 = Rational(m[3]) + x2 + x3 + x4;
    return {x1, x2, x3, x4};
}

Rational oracle_hc(const ConcreteLabels& m, const AlphaCoeffs& b) {
    const auto e = eps(b);
    return Rational(2) * dot(shifted_eps(m), e) / dot(e, e);
}

Rational oracle_dim(const ConcreteLabels& m) {
    Rational d = 1;
    for (const auto& r : f4().positive_roots()) d *= oracle_hc(m, r.alpha) / oracle_hc({1, 1, 1, 1}, r.alpha);
    return d;
}

} // namespace

TEST_SUITE("verma") {

TEST_CASE("fundamental weights are dual to the simple coroots") {
    const auto& w = fundamental_weights();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            AlphaCoeffs a{};
            a[j] = 1;
            CHECK(inner(w[i], coroot(a)) == Rational(i == j ? 1 : 0));
        }
}

TEST_CASE("weight_from_labels") {
    CHECK(weight_from_labels(concrete_labels({1, 1, 1, 1})) == Weight<Rational>{});
    // first two coordinates follow the printed closed forms
    const auto l = weight_from_labels(concrete_labels({1, 2, 3, 4}));
    CHECK(l.alpha[0] == Rational(10));
    CHECK(l.alpha[1] == Rational(20));
    // remaining coordinates are fixed by (Lambda+rho, a_i^v) = m_i
    CHECK(l.alpha[2] == Rational(29));
    CHECK(l.alpha[3] == Rational(16));
    CHECK(labels_from_weight(l) == concrete_labels({1, 2, 3, 4}));
    CHECK(labels_from_weight(rho()) == concrete_labels({2, 2, 2, 2}));
}

TEST_CASE("label round trip, concrete and symbolic") {
    testing::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto m = concrete_labels(rng.labels(0, 12));
        CHECK(labels_from_weight(weight_from_labels(m)) == m);
    }
    const auto s = symbolic_labels(ZeroPattern{});
    CHECK(labels_from_weight(weight_from_labels(s)) == s);
}

TEST_CASE("HC parameters equal the e-basis oracle") {
    testing::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto m = rng.labels();
        for (const auto& e : hc_table(concrete_labels(m))) CHECK(e.value == oracle_hc(m, e.root.alpha));
    }
}

TEST_CASE("symbolic HC table: simple entries and sample closed forms") {
    const auto t = hc_table(symbolic_labels(ZeroPattern{}));
    REQUIRE(t.size() == 24);
    const auto m = [](int i) { return LinearForm::generator(i); };
    for (const auto& e : t) {
        if (e.root.height() == 1)
            for (int i = 0; i < 4; ++i)
                if (e.root.alpha[i]) CHECK(e.value == m(i + 1));
        if (e.root.alpha == AlphaCoeffs{1, 1, 0, 0}) CHECK(e.value == m(1) + m(2));
        if (e.root.alpha == AlphaCoeffs{0, 1, 1, 0}) CHECK(e.value == m(2) * Rational(2) + m(3));
        if (e.root.alpha == AlphaCoeffs{1, 2, 3, 2})
            CHECK(e.value == m(1) * Rational(2) + m(2) * Rational(4) + m(3) * Rational(3) + m(4) * Rational(2));
    }
    const auto unit = hc_table(concrete_labels({1, 1, 1, 1}));
    CHECK(unit.back().root.alpha == AlphaCoeffs{2, 3, 4, 2});
    CHECK(unit.back().value == Rational(8));
}

TEST_CASE("hc_param rejects non-positive roots") {
    const auto l = weight_from_labels(concrete_labels({1, 1, 1, 1}));
    CHECK(hc_param(l, AlphaCoeffs{1, 1, 0, 0}) == Rational(2));
    CHECK_THROWS_AS(hc_param(l, AlphaCoeffs{-1, 0, 0, 0}), NotARoot);
    CHECK_THROWS_AS(hc_param(l, AlphaCoeffs{1, 0, 0, 1}), NotARoot);
}

TEST_CASE("reducibility set") {
    CHECK(reducibility_set(Weight<Rational>{}).size() == 24);
    Weight<Rational> third;
    third.alpha[0] = Rational(1, 3);
    const auto partial = reducibility_set(third);
    for (const auto& r : f4().positive_roots()) {
        const bool kept = std::any_of(partial.begin(), partial.end(), [&](const auto& x) { return x.root == r; });
        CHECK(kept == (inner(Weight<Rational>::from({1, 0, 0, 0}), coroot(r)).is_zero()));
    }
    const LabelVector<Rational> generic{Rational(1, 7), Rational(1, 11), Rational(1, 13), Rational(1, 17)};
    CHECK(reducibility_set(weight_from_labels(generic)).empty());
    const auto set = reducibility_set(weight_from_labels(concrete_labels({1, 2, 3, 4})));
    CHECK(std::any_of(set.begin(), set.end(), [](const auto& r) {
        return r.root.alpha == AlphaCoeffs{1, 1, 0, 0} && r.degree == Rational(3);
    }));
    CHECK_THROWS_AS(reducibility_set(lift(weight_from_labels(concrete_labels({1, 1, 1, 1}))) +
                                     Weight<LinearForm>{{LinearForm::generator(1) - LinearForm::generator(2),
                                                         LinearForm(), LinearForm(), LinearForm()}}),
                    AmbiguousSign);
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim({1, 1, 1, 1}) == 1);
    CHECK(weyl_dim({2, 1, 1, 1}) == 52);
    CHECK(weyl_dim({1, 1, 1, 2}) == 26);
    testing::Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto m = rng.labels(1, 4);
        const auto d = oracle_dim(m);
        REQUIRE(d.is_integer());
        CHECK(weyl_dim(m) == d.num());
    }
    // Lambda + rho = k rho scales every factor by k.
    for (std::int64_t k : {9, 50, 1000}) {
        BigInt p = 1;
        for (int i = 0; i < 24; ++i) p *= k;
        CHECK(weyl_dim({k, k, k, k}) == p);
    }
    CHECK_THROWS_AS(weyl_dim({0, 1, 1, 1}), InvalidLabels);
}

TEST_CASE("zero patterns and label validation") {
    CHECK(zero_pattern_of(concrete_labels({1, 1, 1, 1})).kind() == "MAIN");
    CHECK(zero_pattern_of(concrete_labels({0, 1, 0, 1})).kind() == "M13");
    CHECK(ZeroPattern::from_kind("M24") == ZeroPattern::from_indices({2, 4}));
    CHECK_THROWS_AS(ZeroPattern::from_kind("M5"), std::invalid_argument);
    CHECK_THROWS_AS(concrete_labels({-1, 1, 1, 1}), InvalidLabels);
    LabelVector<Rational> half{Rational(1, 2), 1, 1, 1};
    CHECK_THROWS_AS(zero_pattern_of(half), InvalidLabels);
    const auto s = symbolic_labels(ZeroPattern::from_indices({3}));
    CHECK(s[2].is_zero());
    CHECK(zero_pattern_of(s).kind() == "M3");
}

}
