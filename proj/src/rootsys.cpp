#include "f4gvm/rootsys.hpp"

#include "f4gvm/errors.hpp"
#include "f4gvm/weight.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace f4gvm {

const char* to_string(LengthClass c) { return c == LengthClass::Long ? "long" : "short"; }

bool canonical_less(const AlphaCoeffs& a, const AlphaCoeffs& b) {
    const int ha = a[0] + a[1] + a[2] + a[3];
    const int hb = b[0] + b[1] + b[2] + b[3];
    if (ha != hb) return ha < hb;
    return a < b;
}

std::array<std::array<int, 4>, 4> GramForm::cartan() const {
    std::array<std::array<int, 4>, 4> a{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rational v = Rational(2) * matrix[i][j] / matrix[j][j];
            if (!v.is_integer()) throw std::logic_error("non-integral Cartan entry");
            a[i][j] = static_cast<int>(v.num());
        }
    return a;
}

const GramForm& f4_gram() {
    static const GramForm g = [] {
        GramForm f;
        f.matrix[0][0] = 2;
        f.matrix[1][1] = 2;
        f.matrix[2][2] = 1;
        f.matrix[3][3] = 1;
        f.matrix[0][1] = f.matrix[1][0] = -1;
        f.matrix[1][2] = f.matrix[2][1] = -1;
        f.matrix[2][3] = f.matrix[3][2] = Rational(-1, 2);
        return f;
    }();
    return g;
}

Rational inner(const AlphaCoeffs& u, const AlphaCoeffs& v) {
    const auto& g = f4_gram();
    Rational s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (u[i] != 0 && v[j] != 0) s += g(i, j) * Rational(u[i] * v[j]);
    return s;
}

namespace {

RootVector make_root(const AlphaCoeffs& a) {
    RootVector r;
    r.alpha = a;
    const Rational len = inner(a, a);
    if (len == Rational(2)) r.length = LengthClass::Long;
    else if (len == Rational(1)) r.length = LengthClass::Short;
    else throw std::logic_error("vector of squared length " + len.str() + " is not an F4 root");
    const bool nonneg = std::all_of(a.begin(), a.end(), [](int c) { return c >= 0; });
    r.positive = nonneg && r.height() > 0;
    return r;
}

AlphaCoeffs reflect_coeffs(const AlphaCoeffs& v, const AlphaCoeffs& beta) {
    const Rational k = Rational(2) * inner(v, beta) / inner(beta, beta);
    if (!k.is_integer()) throw std::logic_error("non-integral reflection of a root");
    AlphaCoeffs out = v;
    for (int i = 0; i < 4; ++i) out[i] -= static_cast<int>(k.num()) * beta[i];
    return out;
}

// Positive roots that are not the sum of two positive roots.
std::vector<RootVector> indecomposables(const std::vector<RootVector>& positive) {
    std::set<AlphaCoeffs> sums;
    for (const auto& a : positive)
        for (const auto& b : positive) {
            AlphaCoeffs s;
            for (int i = 0; i < 4; ++i) s[i] = a.alpha[i] + b.alpha[i];
            sums.insert(s);
        }
    std::vector<RootVector> simple;
    for (const auto& r : positive)
        if (!sums.count(r.alpha)) simple.push_back(r);
    return simple;
}

} // namespace

RootSystem::RootSystem(std::string name, std::vector<RootVector> simple, std::vector<RootVector> all)
    : name_(std::move(name)), simple_(std::move(simple)), all_(std::move(all)) {
    auto by_canon = [](const RootVector& a, const RootVector& b) { return canonical_less(a.alpha, b.alpha); };
    std::sort(all_.begin(), all_.end(), by_canon);
    std::sort(simple_.begin(), simple_.end(), by_canon);
    for (const auto& r : all_)
        if (r.positive) positive_.push_back(r);
    const int n = static_cast<int>(simple_.size());
    for (int i = 0; i < n && i < 4; ++i)
        for (int j = 0; j < n && j < 4; ++j) gram_.matrix[i][j] = inner(simple_[i].alpha, simple_[j].alpha);
}

const RootVector* RootSystem::find(const AlphaCoeffs& alpha) const {
    auto it = std::lower_bound(all_.begin(), all_.end(), alpha,
                               [](const RootVector& r, const AlphaCoeffs& a) { return canonical_less(r.alpha, a); });
    if (it != all_.end() && it->alpha == alpha) return &*it;
    return nullptr;
}

const RootVector& RootSystem::root(const AlphaCoeffs& alpha) const {
    if (const auto* r = find(alpha)) return *r;
    throw NotARoot("(" + std::to_string(alpha[0]) + "," + std::to_string(alpha[1]) + "," +
                   std::to_string(alpha[2]) + "," + std::to_string(alpha[3]) + ") is not a root of " + name_);
}

RootSystem build_f4() {
    std::vector<AlphaCoeffs> simple;
    for (int i = 0; i < 4; ++i) {
        AlphaCoeffs a{};
        a[i] = 1;
        simple.push_back(a);
    }
    std::set<AlphaCoeffs> seen(simple.begin(), simple.end());
    std::vector<AlphaCoeffs> frontier = simple;
    while (!frontier.empty()) {
        std::vector<AlphaCoeffs> next;
        for (const auto& v : frontier)
            for (const auto& s : simple) {
                auto img = reflect_coeffs(v, s);
                if (seen.insert(img).second) next.push_back(img);
            }
        if (seen.size() > 48) throw std::logic_error("F4 reflection closure exceeded 48 roots");
        frontier = std::move(next);
    }
    if (seen.size() != 48) throw std::logic_error("F4 reflection closure did not reach 48 roots");

    std::vector<RootVector> all, simple_roots;
    for (const auto& a : seen) all.push_back(make_root(a));
    for (const auto& a : simple) simple_roots.push_back(make_root(a));
    return RootSystem("F4", std::move(simple_roots), std::move(all));
}

const RootSystem& f4() {
    static const RootSystem instance = build_f4();
    return instance;
}

std::pair<std::vector<RootVector>, std::vector<RootVector>> m_split(const RootSystem& rs) {
    std::pair<std::vector<RootVector>, std::vector<RootVector>> out;
    for (const auto& r : rs.positive_roots()) (r.m_compact() ? out.first : out.second).push_back(r);
    return out;
}

RootSystem subsystem(const RootSystem& rs, SubsystemKind kind) {
    std::vector<RootVector> all;
    for (const auto& r : rs.all_roots()) {
        bool keep = false;
        if (kind == SubsystemKind::B3) {
            keep = r.alpha[3] == 0;
        } else {
            const auto eps = alpha_to_eps(Weight<Rational>::from(r.alpha));
            keep = std::all_of(eps.begin(), eps.end(), [](const Rational& x) { return x.is_integer(); });
        }
        if (keep) all.push_back(r);
    }
    std::vector<RootVector> positive;
    for (const auto& r : all)
        if (r.positive) positive.push_back(r);
    return RootSystem(kind == SubsystemKind::B3 ? "B3" : "B4", indecomposables(positive), std::move(all));
}

} // namespace f4gvm
