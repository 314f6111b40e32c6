#include "f4gvm/errors.hpp"
#include "f4gvm/multiplet.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace f4gvm;

namespace {

const LinearForm m1 = LinearForm::generator(1), m2 = LinearForm::generator(2), m3 = LinearForm::generator(3),
                 m4 = LinearForm::generator(4);

template <class S>
void check_invariants(const Multiplet<S>& mp) {
    std::map<Weight<S>, std::size_t> idx;
    for (const auto& n : mp.nodes) {
        CHECK(idx.emplace(n.shifted, n.id).second);
        for (int i = 0; i < 3; ++i) CHECK(sign_of(n.signature[i]) != Sign::Negative);
        CHECK(labels_of_shifted(n.shifted) == n.signature);
        CHECK(n.c == c_parameter(n.shifted));
        CHECK(apply_word(f4(), n.word, shifted_weight(mp.labels)) == n.shifted);
        REQUIRE(n.ks_partner);
        const auto& p = mp.nodes[*n.ks_partner];
        CHECK(p.ks_partner == n.id);
        CHECK(p.c == S{} - n.c);
        CHECK(p.signature[0] == n.signature[0]);
        CHECK(p.signature[1] == n.signature[1]);
        CHECK(p.signature[2] == n.signature[2]);
    }
    for (const auto& e : mp.edges) {
        const auto& a = mp.nodes[e.from];
        const auto& b = mp.nodes[e.to];
        CHECK_FALSE(e.root.m_compact());
        CHECK(e.root.positive);
        CHECK(e.degree == hc_of_shifted(a.shifted, e.root.alpha));
        CHECK(sign_of(e.degree) == Sign::Positive);
        CHECK(reflect(a.shifted, e.root) == b.shifted);
        CHECK(e.level.has_value() == e.degree_form.generator_index().has_value());
        if (e.level) CHECK(sign_of(mp.labels[*e.level - 1]) == Sign::Positive);
    }
    std::set<std::string> names;
    for (const auto& n : mp.nodes) {
        CHECK_FALSE(n.name.empty());
        CHECK(names.insert(n.name).second);
    }
}

} // namespace

TEST_SUITE("multiplet") {

TEST_CASE("main multiplet, symbolic") {
    const auto mp = classify_symbolic(ZeroPattern{});
    check_invariants(mp);
    CHECK(mp.orbit_size == 1152);
    CHECK(mp.nodes.size() == 24);
    CHECK(mp.m_finite_count() == 24);
    CHECK(mp.ks_pairs.size() == 12);
    CHECK(mp.edges.size() == 48);

    const auto* h = mp.find("h-");
    REQUIRE(h);
    CHECK(h->signature == LabelVector<LinearForm>{m2 + m3, m1, m2 * Rational(2) + m3 + m4,
                                                  -(m1 * Rational(2) + m2 * Rational(4) + m3 * Rational(2) + m4)});
    const auto* zm = mp.find("0-");
    const auto* zp = mp.find("0+");
    REQUIRE(zm);
    REQUIRE(zp);
    CHECK(zm->signature == symbolic_labels(ZeroPattern{}));
    CHECK(zp->shifted == reflect(zm->shifted, kEpsilon1));
    CHECK(zp->name_source == NameSource::KsPartner);
    CHECK(zm->c == -(m1 + m2 * Rational(2) + m3 * Rational(3, 2) + m4));
}

TEST_CASE("degenerate KS pairs of the main multiplet are j and k") {
    const auto mp = classify_symbolic(ZeroPattern{});
    std::set<std::string> got;
    for (const auto& [a, b] : degenerate_ks(mp)) {
        CHECK(letter_of(mp.nodes[a].name) == letter_of(mp.nodes[b].name));
        got.insert(letter_of(mp.nodes[a].name));
    }
    CHECK(got == std::set<std::string>{"j", "k"});
    for (const auto& e : mp.edges)
        if (mp.nodes[e.from].name == "j-" && mp.nodes[e.to].name == "j+") {
            CHECK(e.level == 4);
            CHECK(e.root.alpha == kEpsilon1);
        }
}

TEST_CASE("annotations") {
    const auto mp = classify(ConcreteLabels{1, 1, 1, 1});
    std::set<std::string> fin, ds;
    for (const auto& n : mp.nodes) {
        if (n.finite_dim) fin.insert(n.name);
        if (n.discrete_series) ds.insert(n.name);
    }
    CHECK(fin == std::set<std::string>{"0-"});
    CHECK(ds == std::set<std::string>{"0+", "a+", "b+"});
    CHECK(mp.find("0-")->finite_dim_size == 1);
    CHECK(classify(ConcreteLabels{2, 1, 1, 1}).find("0-")->finite_dim_size == 52);
}

TEST_CASE("reduced multiplets") {
    struct Expect {
        const char* kind;
        std::size_t orbit, nodes, m_finite;
    };
    for (const auto& x : {Expect{"M1", 576, 18, 6}, Expect{"M2", 576, 18, 6}, Expect{"M3", 576, 15, 9},
                          Expect{"M4", 576, 15, 9}, Expect{"M13", 288, 11, 2}, Expect{"M24", 288, 11, 2},
                          Expect{"M34", 192, 7, 1}, Expect{"M12", 192, 12, 0}, Expect{"M14", 288, 11, 2},
                          Expect{"M23", 144, 9, 0}}) {
        CAPTURE(x.kind);
        const auto mp = classify_symbolic(ZeroPattern::from_kind(x.kind));
        check_invariants(mp);
        CHECK(mp.orbit_size == x.orbit);
        CHECK(mp.nodes.size() == x.nodes);
        CHECK(mp.m_finite_count() == x.m_finite);
    }
    const auto m34 = classify_symbolic(ZeroPattern::from_kind("M34"));
    for (const auto& n : m34.nodes)
        if (n.m_finite) {
            CHECK(n.c.is_zero());
            CHECK(n.ks_partner == n.id);
        }
}

TEST_CASE("property: concrete classification equals the evaluated symbolic one") {
    testing::Rng rng(2024);
    const auto sym = classify_symbolic(ZeroPattern{});
    for (int t = 0; t < 20; ++t) {
        const auto m = rng.labels();
        CAPTURE(m);
        const auto c = classify(m);
        check_invariants(c);
        const auto diff = compare_with_symbolic(c, sym);
        CHECK_MESSAGE(!diff, (diff ? *diff : ""));
    }
}

TEST_CASE("property: reduced kinds agree across modes") {
    testing::Rng rng(99);
    for (const char* k : {"M1", "M2", "M3", "M4", "M13", "M24", "M34", "M12", "M14", "M23"}) {
        const auto p = ZeroPattern::from_kind(k);
        const auto sym = classify_symbolic(p);
        for (int t = 0; t < 3; ++t) {
            auto m = rng.labels();
            for (int i = 0; i < 4; ++i)
                if (p.pinned(i + 1)) m[i] = 0;
            CAPTURE(k);
            const auto diff = compare_with_symbolic(classify(m), sym);
            CHECK_MESSAGE(!diff, (diff ? *diff : ""));
        }
    }
}

TEST_CASE("transitive reduction keeps reachability and drops only implied edges") {
    const auto mp = classify(ConcreteLabels{2, 3, 5, 7});
    const auto red = transitive_reduction(mp.edges, mp.nodes.size());
    CHECK(red.size() == 32);
    auto closure = [&](const std::vector<Embedding<Rational>>& es) {
        std::vector<std::set<std::size_t>> reach(mp.nodes.size());
        for (const auto& e : es) reach[e.from].insert(e.to);
        for (bool changed = true; changed;) {
            changed = false;
            for (auto& r : reach)
                for (auto v : std::set<std::size_t>(r))
                    for (auto w : reach[v]) changed |= r.insert(w).second;
        }
        return reach;
    };
    CHECK(closure(red) == closure(mp.edges));
    for (const auto& e : red) {
        auto rest = red;
        rest.erase(std::find_if(rest.begin(), rest.end(),
                                [&](const auto& x) { return x.from == e.from && x.to == e.to; }));
        CHECK(closure(rest)[e.from].count(e.to) == 0);
    }
}

TEST_CASE("level assignment decodes the degree form") {
    const auto mp = classify(ConcreteLabels{3, 3, 3, 3});
    for (const auto& e : mp.edges) {
        CHECK(e.degree_form.evaluate(mp.labels) == e.degree);
        CHECK(e.degree_form.constant().is_zero());
        for (const auto& k : e.degree_form.coeffs()) CHECK(k.sign() >= 0);
    }
    const auto m2 = classify(ConcreteLabels{1, 0, 1, 1});
    for (const auto& e : m2.edges) CHECK(e.degree_form.coeff(2).is_zero());
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(classify(ConcreteLabels{1, -2, 1, 1}), InvalidLabels);
    LabelVector<Rational> half{1, Rational(1, 2), 1, 1};
    CHECK_THROWS_AS(classify(half), InvalidLabels);
}

}
