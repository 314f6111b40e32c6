#pragma once

#include "f4gvm/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>

namespace f4gvm {

/// Outcome of a sign query. Linear forms may be undecidable.
enum class Sign { Negative, Zero, Positive, Ambiguous };

const char* to_string(Sign s);

/// Affine-linear expression  c1*m1 + c2*m2 + c3*m3 + c4*m4 + constant
/// in the Dynkin labels, with exact rational coefficients.
///
/// Sign queries assume every label that occurs ranges over the strictly
/// positive integers.
class LinearForm {
public:
    using Coeffs = std::array<Rational, 4>;

    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(constant) {}
    LinearForm(Coeffs coeffs, Rational constant) : coeffs_(coeffs), constant_(constant) {}

    /// The generator m_index (index in 1..4).
    static LinearForm generator(int index);

    const Coeffs& coeffs() const { return coeffs_; }
    const Rational& coeff(int index) const { return coeffs_.at(index - 1); }
    const Rational& constant() const { return constant_; }

    bool is_zero() const;
    bool is_constant() const;
    /// Integer-valued for every integer assignment of the labels.
    bool is_integral() const;
    /// Index i when the form is exactly m_i, otherwise nullopt.
    std::optional<int> generator_index() const;

    Sign sign() const;
    Rational evaluate(const std::array<Rational, 4>& labels) const;

    LinearForm operator-() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& k);

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& k) { return a *= k; }
    friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

    /// Compact rendering, e.g. "2m1+4m2+3m3/2-8"; zero is "0".
    std::string str() const;

private:
    Coeffs coeffs_{};
    Rational constant_{};
};

Sign sign_of(const Rational& r);
inline Sign sign_of(const LinearForm& f) { return f.sign(); }
inline bool is_integral(const Rational& r) { return r.is_integer(); }
inline bool is_integral(const LinearForm& f) { return f.is_integral(); }
inline std::string to_text(const Rational& r) { return r.str(); }
inline std::string to_text(const LinearForm& f) { return f.str(); }

} // namespace f4gvm
