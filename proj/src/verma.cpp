#include "f4gvm/verma.hpp"

#include "f4gvm/errors.hpp"

#include <stdexcept>

namespace f4gvm {

ZeroPattern ZeroPattern::from_indices(std::initializer_list<int> indices) {
    ZeroPattern p;
    for (int i : indices) {
        if (i < 1 || i > 4) throw std::out_of_range("label index must be 1..4");
        p.mask_ |= 1u << (i - 1);
    }
    return p;
}

std::string ZeroPattern::kind() const {
    if (empty()) return "MAIN";
    std::string s = "M";
    for (int i = 1; i <= 4; ++i)
        if (pinned(i)) s += static_cast<char>('0' + i);
    return s;
}

ZeroPattern ZeroPattern::from_kind(const std::string& kind) {
    if (kind == "MAIN") return {};
    if (kind.size() < 2 || kind[0] != 'M') throw std::invalid_argument("unknown multiplet kind '" + kind + "'");
    ZeroPattern p;
    int last = 0;
    for (std::size_t i = 1; i < kind.size(); ++i) {
        const int d = kind[i] - '0';
        if (d <= last || d > 4) throw std::invalid_argument("unknown multiplet kind '" + kind + "'");
        p.mask_ |= 1u << (d - 1);
        last = d;
    }
    return p;
}

LabelVector<Rational> concrete_labels(const ConcreteLabels& m) {
    LabelVector<Rational> out;
    for (int i = 0; i < 4; ++i) {
        if (m[i] < 0) throw InvalidLabels("Dynkin label m" + std::to_string(i + 1) + " is negative");
        out[i] = m[i];
    }
    return out;
}

LabelVector<LinearForm> symbolic_labels(ZeroPattern pattern) {
    LabelVector<LinearForm> out;
    for (int i = 1; i <= 4; ++i)
        if (!pattern.pinned(i)) out[i - 1] = LinearForm::generator(i);
    return out;
}

ZeroPattern zero_pattern_of(const LabelVector<Rational>& m) {
    std::string kind = "M";
    for (int i = 0; i < 4; ++i) {
        if (!m[i].is_integer() || m[i].sign() < 0)
            throw InvalidLabels("Dynkin label m" + std::to_string(i + 1) + " = " + m[i].str() +
                                " is not a non-negative integer");
        if (m[i].is_zero()) kind += std::to_string(i + 1);
    }
    return kind == "M" ? ZeroPattern{} : ZeroPattern::from_kind(kind);
}

ZeroPattern zero_pattern_of(const LabelVector<LinearForm>& m) {
    std::string kind = "M";
    for (int i = 0; i < 4; ++i) {
        switch (m[i].sign()) {
        case Sign::Zero: kind += std::to_string(i + 1); break;
        case Sign::Positive:
            if (!m[i].is_integral())
                throw InvalidLabels("symbolic label m" + std::to_string(i + 1) + " is not integral");
            break;
        case Sign::Negative: throw InvalidLabels("symbolic label m" + std::to_string(i + 1) + " is negative");
        case Sign::Ambiguous:
            throw AmbiguousSign("sign of symbolic label m" + std::to_string(i + 1) + " = " + m[i].str() +
                                " is undecidable");
        }
    }
    return kind == "M" ? ZeroPattern{} : ZeroPattern::from_kind(kind);
}

const std::array<Weight<Rational>, 4>& fundamental_weights() {
    // Solve sum_k w_ik (a_k, a_j^v) = delta_ij by Gauss-Jordan on the 4x4
    // matrix C_kj = (a_k, a_j^v).
    static const std::array<Weight<Rational>, 4> weights = [] {
        std::array<std::array<Rational, 8>, 4> aug{};
        for (int j = 0; j < 4; ++j) {
            AlphaCoeffs aj{};
            aj[j] = 1;
            const auto cj = coroot(aj);
            for (int k = 0; k < 4; ++k) {
                AlphaCoeffs ak{};
                ak[k] = 1;
                // row j of the transposed system: sum_k C_kj x_k = e_j
                aug[j][k] = inner(Weight<Rational>::from(ak), cj);
            }
            aug[j][4 + j] = 1;
        }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            while (aug[piv][col].is_zero()) ++piv;
            std::swap(aug[piv], aug[col]);
            const Rational p = aug[col][col];
            for (auto& v : aug[col]) v /= p;
            for (int r = 0; r < 4; ++r) {
                if (r == col || aug[r][col].is_zero()) continue;
                const Rational f = aug[r][col];
                for (int c = 0; c < 8; ++c) aug[r][c] -= f * aug[col][c];
            }
        }
        // inverse columns give the weights: w_i,k = inv[k][i]
        std::array<Weight<Rational>, 4> w{};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) w[i].alpha[k] = aug[k][4 + i];
        return w;
    }();
    return weights;
}

std::vector<Reducibility<Rational>> reducibility_set(const Weight<Rational>& lambda) {
    std::vector<Reducibility<Rational>> out;
    for (const auto& r : f4().positive_roots()) {
        const Rational m = hc_param(lambda, r.alpha);
        if (m.is_integer() && m.sign() > 0) out.push_back({r, m});
    }
    return out;
}

std::vector<Reducibility<LinearForm>> reducibility_set(const Weight<LinearForm>& lambda) {
    std::vector<Reducibility<LinearForm>> out;
    for (const auto& r : f4().positive_roots()) {
        const LinearForm m = hc_param(lambda, r.alpha);
        const Sign s = m.sign();
        if (s == Sign::Ambiguous)
            throw AmbiguousSign("sign of m_beta = " + m.str() + " is undecidable");
        if (s == Sign::Positive && m.is_integral()) out.push_back({r, m});
    }
    return out;
}

BigInt weyl_dim(const ConcreteLabels& m) {
    for (int i = 0; i < 4; ++i)
        if (m[i] < 1) throw InvalidLabels("weyl_dim needs labels >= 1, got m" + std::to_string(i + 1) + " = " +
                                          std::to_string(m[i]));
    const auto x = shifted_weight(concrete_labels(m));
    const auto r = rho();
    // Both products are integral; (x, b^v) can be large, so only the
    // rho-side factors are kept as Rational.
    BigInt num = 1, den = 1;
    for (const auto& b : f4().positive_roots()) {
        const Rational p = hc_of_shifted(x, b.alpha);
        const Rational q = hc_of_shifted(r, b.alpha);
        num *= BigInt(p.num()) * q.den();
        den *= BigInt(q.num()) * p.den();
    }
    return num / den;
}

} // namespace f4gvm
