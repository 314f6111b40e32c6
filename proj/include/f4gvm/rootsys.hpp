#pragma once

#include "f4gvm/rational.hpp"

#include <array>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace f4gvm {

/// Coefficients over the F4 simple roots a1..a4.
using AlphaCoeffs = std::array<int, 4>;

enum class LengthClass { Long, Short };

const char* to_string(LengthClass c);

struct RootVector {
    AlphaCoeffs alpha{};
    LengthClass length = LengthClass::Long;
    bool positive = false;

    int height() const { return alpha[0] + alpha[1] + alpha[2] + alpha[3]; }
    /// M-compact: lies in the span of a1, a2, a3.
    bool m_compact() const { return alpha[3] == 0; }

    friend bool operator==(const RootVector& a, const RootVector& b) { return a.alpha == b.alpha; }
};

/// Canonical order: by height, ties lexicographic on coefficients.
bool canonical_less(const AlphaCoeffs& a, const AlphaCoeffs& b);

/// Symmetric matrix of inner products (a_i, a_j).
struct GramForm {
    std::array<std::array<Rational, 4>, 4> matrix{};

    const Rational& operator()(int i, int j) const { return matrix[i][j]; }
    /// a_ij = 2(a_i, a_j)/(a_j, a_j)
    std::array<std::array<int, 4>, 4> cartan() const;
};

/// The F4 Gram form in the normalization long = 2, short = 1.
const GramForm& f4_gram();

/// Inner product of two integer vectors over a1..a4 under the F4 form.
Rational inner(const AlphaCoeffs& u, const AlphaCoeffs& v);

enum class SubsystemKind { B3, B4 };

/// A root system embedded in the F4 weight lattice.
///
/// All vectors are expressed over the F4 simple roots; for the B3 and
/// B4 subsystems `simple_roots()` returns the subsystem's own basis and
/// `gram()` its own Gram matrix. Immutable after construction.
class RootSystem {
public:
    RootSystem(std::string name, std::vector<RootVector> simple, std::vector<RootVector> all);

    const std::string& name() const { return name_; }
    std::span<const RootVector> simple_roots() const { return simple_; }
    std::span<const RootVector> all_roots() const { return all_; }
    std::span<const RootVector> positive_roots() const { return positive_; }
    /// Inner products of this system's simple roots.
    const GramForm& gram() const { return gram_; }
    int rank() const { return static_cast<int>(simple_.size()); }

    /// Root with the given coefficients, or nullptr.
    const RootVector* find(const AlphaCoeffs& alpha) const;
    bool contains(const AlphaCoeffs& alpha) const { return find(alpha) != nullptr; }
    /// Throws NotARoot when absent.
    const RootVector& root(const AlphaCoeffs& alpha) const;

private:
    std::string name_;
    std::vector<RootVector> simple_;
    std::vector<RootVector> all_;
    std::vector<RootVector> positive_;
    GramForm gram_;
};

/// Generates F4 from its simple roots by closure under simple reflections.
RootSystem build_f4();

/// Shared, lazily built instance of build_f4().
const RootSystem& f4();

/// Positive roots split by M-compactness (a4-coefficient zero).
std::pair<std::vector<RootVector>, std::vector<RootVector>> m_split(const RootSystem& rs);

/// B3 = roots in the span of a1..a3; B4 = roots with integral e-coordinates.
RootSystem subsystem(const RootSystem& rs, SubsystemKind kind);

/// The highest short root a1+2a2+3a3+2a4, equal to e1.
inline constexpr AlphaCoeffs kEpsilon1{1, 2, 3, 2};

} // namespace f4gvm
