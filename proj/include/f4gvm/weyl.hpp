#pragma once

#include "f4gvm/errors.hpp"
#include "f4gvm/weight.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <vector>

namespace f4gvm {

/// w - (w, b^v) b. Throws NotARoot unless b is an F4 root.
template <class S>
Weight<S> reflect(const Weight<S>& w, const AlphaCoeffs& beta) {
    const auto& r = f4().root(beta);
    const S k = inner(w, r.alpha) * (Rational(2) / inner(r.alpha, r.alpha));
    Weight<S> out = w;
    for (int i = 0; i < 4; ++i)
        if (r.alpha[i] != 0) out.alpha[i] -= k * Rational(r.alpha[i]);
    return out;
}

template <class S>
Weight<S> reflect(const Weight<S>& w, const RootVector& beta) {
    return reflect(w, beta.alpha);
}

/// A generating word: indices into RootSystem::simple_roots(), applied
/// left to right.
using Word = std::vector<int>;

struct OrbitOptions {
    bool record_words = false;
};

template <class S>
struct Orbit {
    std::vector<Weight<S>> points;  // canonical (sorted) order
    std::vector<Word> words;        // parallel to points when recorded
};

/// Weyl orbit of w under the simple reflections of rs, by breadth-first
/// closure with exact deduplication.
template <class S>
Orbit<S> orbit(const RootSystem& rs, const Weight<S>& w, OrbitOptions opts = {}) {
    const auto simple = rs.simple_roots();
    std::map<Weight<S>, Word> seen;
    seen.emplace(w, Word{});
    std::vector<const Weight<S>*> frontier{&seen.begin()->first};
    while (!frontier.empty()) {
        std::vector<const Weight<S>*> next;
        for (const auto* p : frontier) {
            for (int i = 0; i < static_cast<int>(simple.size()); ++i) {
                auto img = reflect(*p, simple[i].alpha);
                if (seen.count(img)) continue;
                Word word;
                if (opts.record_words) {
                    word = seen.at(*p);
                    word.push_back(i);
                }
                auto [it, inserted] = seen.emplace(std::move(img), std::move(word));
                next.push_back(&it->first);
            }
        }
        frontier = std::move(next);
    }
    Orbit<S> out;
    out.points.reserve(seen.size());
    for (auto& [pt, word] : seen) {
        out.points.push_back(pt);
        if (opts.record_words) out.words.push_back(word);
    }
    return out;
}

/// Applies the simple reflections named by word, left to right.
template <class S>
Weight<S> apply_word(const RootSystem& rs, const Word& word, Weight<S> w) {
    for (int i : word) w = reflect(w, rs.simple_roots()[static_cast<std::size_t>(i)].alpha);
    return w;
}

/// Size of the orbit of rs's own (regular) rho, i.e. |W(rs)|.
std::size_t group_order(const RootSystem& rs);

} // namespace f4gvm
