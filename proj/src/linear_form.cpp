#include "f4gvm/linear_form.hpp"

#include <sstream>
#include <stdexcept>

namespace f4gvm {

const char* to_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Ambiguous: return "ambiguous";
    }
    return "?";
}

Sign sign_of(const Rational& r) {
    switch (r.sign()) {
    case -1: return Sign::Negative;
    case 0: return Sign::Zero;
    default: return Sign::Positive;
    }
}

LinearForm LinearForm::generator(int index) {
    if (index < 1 || index > 4) throw std::out_of_range("generator index must be 1..4");
    LinearForm f;
    f.coeffs_[index - 1] = 1;
    return f;
}

bool LinearForm::is_zero() const { return is_constant() && constant_.is_zero(); }

bool LinearForm::is_constant() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool LinearForm::is_integral() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer()) return false;
    return constant_.is_integer();
}

std::optional<int> LinearForm::generator_index() const {
    if (!constant_.is_zero()) return std::nullopt;
    std::optional<int> found;
    for (int i = 0; i < 4; ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (coeffs_[i] != Rational(1) || found) return std::nullopt;
        found = i + 1;
    }
    return found;
}

Sign LinearForm::sign() const {
    bool any_pos = constant_.sign() > 0, any_neg = constant_.sign() < 0;
    bool any_var_pos = false, any_var_neg = false;
    for (const auto& c : coeffs_) {
        any_var_pos |= c.sign() > 0;
        any_var_neg |= c.sign() < 0;
    }
    any_pos |= any_var_pos;
    any_neg |= any_var_neg;
    if (!any_pos && !any_neg) return Sign::Zero;
    if (any_pos && !any_neg) return Sign::Positive;
    if (any_neg && !any_pos) return Sign::Negative;
    return Sign::Ambiguous;
}

Rational LinearForm::evaluate(const std::array<Rational, 4>& labels) const {
    Rational v = constant_;
    for (int i = 0; i < 4; ++i) v += coeffs_[i] * labels[i];
    return v;
}

LinearForm LinearForm::operator-() const {
    LinearForm f;
    for (int i = 0; i < 4; ++i) f.coeffs_[i] = -coeffs_[i];
    f.constant_ = -constant_;
    return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (int i = 0; i < 4; ++i) coeffs_[i] += o.coeffs_[i];
    constant_ += o.constant_;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm& LinearForm::operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    constant_ *= k;
    return *this;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
    for (int i = 0; i < 4; ++i)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return a.constant_ <=> b.constant_;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& var) {
        if (c.is_zero()) return;
        const bool neg = c.sign() < 0;
        if (neg) os << '-';
        else if (!first) os << '+';
        const std::int64_t n = neg ? -c.num() : c.num();
        if (var.empty()) {
            os << n;
            if (c.den() != 1) os << '/' << c.den();
        } else {
            if (n != 1) os << n;
            os << var;
            if (c.den() != 1) os << '/' << c.den();
        }
        first = false;
    };
    for (int i = 0; i < 4; ++i) emit(coeffs_[i], "m" + std::to_string(i + 1));
    emit(constant_, "");
    if (first) return "0";
    return os.str();
}

} // namespace f4gvm
