#pragma once

#include "f4gvm/linear_form.hpp"
#include "f4gvm/rational.hpp"
#include "f4gvm/rootsys.hpp"

#include <array>
#include <compare>
#include <sstream>
#include <string>

namespace f4gvm {

/// Weight over the simple roots a1..a4 with coordinates in a scalar
/// domain S (Rational for concrete runs, LinearForm for symbolic ones).
template <class S>
struct Weight {
    std::array<S, 4> alpha{};

    static Weight from(const AlphaCoeffs& a) {
        Weight w;
        for (int i = 0; i < 4; ++i) w.alpha[i] = S(Rational(a[i]));
        return w;
    }

    Weight& operator+=(const Weight& o) {
        for (int i = 0; i < 4; ++i) alpha[i] += o.alpha[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (int i = 0; i < 4; ++i) alpha[i] -= o.alpha[i];
        return *this;
    }
    Weight& operator*=(const Rational& k) {
        for (auto& x : alpha) x *= k;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational& k) { return a *= k; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '(' << to_text(alpha[0]) << ',' << to_text(alpha[1]) << ',' << to_text(alpha[2]) << ','
           << to_text(alpha[3]) << ')';
        return os.str();
    }
};

/// e-coordinates: a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
template <class S>
std::array<S, 4> alpha_to_eps(const Weight<S>& w) {
    static const std::array<std::array<Rational, 4>, 4> rows{{
        {0, 1, -1, 0},
        {0, 0, 1, -1},
        {0, 0, 0, 1},
        {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)},
    }};
    std::array<S, 4> e{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (!rows[i][k].is_zero()) e[k] += w.alpha[i] * rows[i][k];
    return e;
}

/// Inverse of alpha_to_eps: e1 = a1+2a2+3a3+2a4, e2 = a1+a2+a3, e3 = a2+a3, e4 = a3.
template <class S>
Weight<S> eps_to_alpha(const std::array<S, 4>& e) {
    static const std::array<std::array<Rational, 4>, 4> rows{{
        {1, 2, 3, 2},
        {1, 1, 1, 0},
        {0, 1, 1, 0},
        {0, 0, 1, 0},
    }};
    Weight<S> w;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            if (!rows[k][i].is_zero()) w.alpha[i] += e[k] * rows[k][i];
    return w;
}

/// (w, v) under the F4 form; v has rational coordinates.
template <class S>
S inner(const Weight<S>& w, const Weight<Rational>& v) {
    const auto& g = f4_gram();
    S s{};
    for (int i = 0; i < 4; ++i) {
        Rational gv;
        for (int j = 0; j < 4; ++j) gv += g(i, j) * v.alpha[j];
        if (!gv.is_zero()) s += w.alpha[i] * gv;
    }
    return s;
}

template <class S>
S inner(const Weight<S>& w, const AlphaCoeffs& v) {
    return inner(w, Weight<Rational>::from(v));
}

/// 2b/(b,b); throws NotARoot unless b is an F4 root.
Weight<Rational> coroot(const AlphaCoeffs& beta);
inline Weight<Rational> coroot(const RootVector& beta) { return coroot(beta.alpha); }

/// Half the sum of the positive roots of rs.
Weight<Rational> rho(const RootSystem& rs);
inline Weight<Rational> rho() { return rho(f4()); }

Weight<Rational> evaluate(const Weight<LinearForm>& w, const std::array<Rational, 4>& labels);

/// Lifts a rational weight into the symbolic domain (constant forms).
Weight<LinearForm> lift(const Weight<Rational>& w);

} // namespace f4gvm
