#pragma once

#include "f4gvm/errors.hpp"
#include "f4gvm/weight.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace f4gvm {

/// Subset of {1,2,3,4}: Dynkin labels pinned to zero (reduced multiplets).
class ZeroPattern {
public:
    constexpr ZeroPattern() = default;
    static ZeroPattern from_indices(std::initializer_list<int> indices);

    bool pinned(int index) const { return (mask_ >> (index - 1)) & 1u; }
    bool empty() const { return mask_ == 0; }
    unsigned mask() const { return mask_; }
    /// "MAIN", or "M" followed by the pinned indices ("M13").
    std::string kind() const;
    /// Inverse of kind(); throws std::invalid_argument.
    static ZeroPattern from_kind(const std::string& kind);

    friend bool operator==(ZeroPattern, ZeroPattern) = default;
    friend auto operator<=>(ZeroPattern, ZeroPattern) = default;

private:
    unsigned mask_ = 0;
};

template <class S>
using LabelVector = std::array<S, 4>;

using ConcreteLabels = std::array<std::int64_t, 4>;

/// Concrete labels as rationals; every entry must be >= 0.
LabelVector<Rational> concrete_labels(const ConcreteLabels& m);
/// The generators m1..m4, with pinned entries replaced by 0.
LabelVector<LinearForm> symbolic_labels(ZeroPattern pattern);

/// Zero pattern of a label vector; throws InvalidLabels for negative,
/// non-integral or sign-ambiguous entries.
ZeroPattern zero_pattern_of(const LabelVector<Rational>& m);
ZeroPattern zero_pattern_of(const LabelVector<LinearForm>& m);

/// Fundamental weights w_i, (w_i, a_j^v) = delta_ij, over a1..a4.
const std::array<Weight<Rational>, 4>& fundamental_weights();

/// Lambda + rho = sum m_i w_i.
template <class S>
Weight<S> shifted_weight(const LabelVector<S>& m) {
    Weight<S> x;
    const auto& w = fundamental_weights();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (!w[i].alpha[k].is_zero()) x.alpha[k] += m[i] * w[i].alpha[k];
    return x;
}

/// Highest weight Lambda with (Lambda + rho, a_i^v) = m_i.
template <class S>
Weight<S> weight_from_labels(const LabelVector<S>& m) {
    Weight<S> x = shifted_weight(m);
    const auto r = rho();
    for (int k = 0; k < 4; ++k) x.alpha[k] -= S(r.alpha[k]);
    return x;
}

/// (x, a_i^v) for an already shifted weight x = Lambda + rho.
template <class S>
LabelVector<S> labels_of_shifted(const Weight<S>& x) {
    LabelVector<S> m;
    for (int i = 0; i < 4; ++i) {
        AlphaCoeffs a{};
        a[i] = 1;
        m[i] = inner(x, coroot(a));
    }
    return m;
}

/// m_i = (Lambda + rho, a_i^v).
template <class S>
LabelVector<S> labels_from_weight(const Weight<S>& lambda) {
    Weight<S> x = lambda;
    const auto r = rho();
    for (int k = 0; k < 4; ++k) x.alpha[k] += S(r.alpha[k]);
    return labels_of_shifted(x);
}

/// (x, b^v) for an already shifted weight x.
template <class S>
S hc_of_shifted(const Weight<S>& x, const AlphaCoeffs& beta) {
    return inner(x, coroot(beta));
}

/// Harish-Chandra parameter (Lambda + rho, b^v). Throws NotARoot unless
/// b is a positive root.
template <class S>
S hc_param(const Weight<S>& lambda, const AlphaCoeffs& beta) {
    const auto& r = f4().root(beta);
    if (!r.positive) throw NotARoot("Harish-Chandra parameters are defined on positive roots");
    Weight<S> x = lambda;
    const auto rh = rho();
    for (int k = 0; k < 4; ++k) x.alpha[k] += S(rh.alpha[k]);
    return hc_of_shifted(x, beta);
}

template <class S>
struct HCEntry {
    RootVector root;
    S value;
};

/// All 24 parameters in canonical root order.
template <class S>
std::vector<HCEntry<S>> hc_table(const LabelVector<S>& m) {
    const Weight<S> x = shifted_weight(m);
    std::vector<HCEntry<S>> out;
    for (const auto& r : f4().positive_roots()) out.push_back({r, hc_of_shifted(x, r.alpha)});
    return out;
}

template <class S>
struct Reducibility {
    RootVector root;
    S degree;  // positive integer (or positive integral form)
};

/// Positive roots whose parameter is a positive integer; each yields the
/// submodule of highest weight Lambda - degree * root.
std::vector<Reducibility<Rational>> reducibility_set(const Weight<Rational>& lambda);
/// Symbolic variant; throws AmbiguousSign when a parameter's sign cannot
/// be decided.
std::vector<Reducibility<LinearForm>> reducibility_set(const Weight<LinearForm>& lambda);

/// Dimension of the finite-dimensional irrep with Dynkin labels m, by the
/// Weyl product over the 24 positive roots. Throws InvalidLabels unless
/// every label is >= 1. Exact for any size (the value grows like m^24).
using BigInt = boost::multiprecision::cpp_int;
BigInt weyl_dim(const ConcreteLabels& m);

} // namespace f4gvm
