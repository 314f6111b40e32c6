#include "f4gvm/weight.hpp"

namespace f4gvm {

Weight<Rational> coroot(const AlphaCoeffs& beta) {
    const auto& r = f4().root(beta);
    return Weight<Rational>::from(r.alpha) * (Rational(2) / inner(r.alpha, r.alpha));
}

Weight<Rational> rho(const RootSystem& rs) {
    Weight<Rational> sum;
    for (const auto& r : rs.positive_roots()) sum += Weight<Rational>::from(r.alpha);
    return sum * Rational(1, 2);
}

Weight<Rational> evaluate(const Weight<LinearForm>& w, const std::array<Rational, 4>& labels) {
    Weight<Rational> out;
    for (int i = 0; i < 4; ++i) out.alpha[i] = w.alpha[i].evaluate(labels);
    return out;
}

Weight<LinearForm> lift(const Weight<Rational>& w) {
    Weight<LinearForm> out;
    for (int i = 0; i < 4; ++i) out.alpha[i] = LinearForm(w.alpha[i]);
    return out;
}

} // namespace f4gvm
