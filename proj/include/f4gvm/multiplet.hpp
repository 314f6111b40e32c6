#pragma once

#include "f4gvm/paperdata.hpp"
#include "f4gvm/verma.hpp"
#include "f4gvm/weyl.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f4gvm {

enum class NameSource {
    Signature,   // own printed signature table
    Compact,     // own printed compact table
    MainAtWall,  // main signature table evaluated on the pinned labels
    KsPartner,   // sign-flipped name of the KS partner
    Synthesized, // "n<id>"
};

const char* to_string(NameSource s);

template <class S>
struct GvmNode {
    std::size_t id = 0;
    Weight<S> shifted;           // Lambda + rho of the node
    Word word;                   // simple reflections from the dominant point
    LabelVector<S> signature{};  // {m'1, m'2, m'3, m'4}
    S c{};                       // -(Lambda + rho, e1)
    bool m_finite = false;       // m'1, m'2, m'3 all positive
    std::optional<std::size_t> ks_partner;

    std::string name;
    std::vector<std::string> aliases;
    NameSource name_source = NameSource::Synthesized;

    bool finite_dim = false;      // carries the finite-dimensional subrepresentation
    bool discrete_series = false;
    std::optional<BigInt> finite_dim_size;

    Weight<S> highest_weight() const {
        Weight<S> w = shifted;
        const auto r = rho();
        for (int k = 0; k < 4; ++k) w.alpha[k] -= S(r.alpha[k]);
        return w;
    }
    bool answers_to(const std::string& n) const;
};

template <class S>
struct Embedding {
    std::size_t from = 0;
    std::size_t to = 0;
    RootVector root;
    S degree{};
    LinearForm degree_form;   // the degree as a form in m1..m4
    std::optional<int> level; // i when the degree is exactly m_i
};

struct NamingRecord {
    std::size_t node = 0;
    std::string name;
    NameSource source = NameSource::Synthesized;
    std::string detail;
};

template <class S>
struct Multiplet {
    LabelVector<S> labels{};
    ZeroPattern pattern;
    std::size_t orbit_size = 0;
    std::vector<GvmNode<S>> nodes;
    std::vector<Embedding<S>> edges;  // every embedding, not reduced
    /// KS pairs (minus member, plus member); a self-partnered node appears
    /// as (i, i).
    std::vector<std::pair<std::size_t, std::size_t>> ks_pairs;
    std::vector<NamingRecord> naming;
    std::vector<std::string> findings;

    std::string kind() const { return pattern.kind(); }
    std::size_t m_finite_count() const;
    const GvmNode<S>* find(const std::string& name) const;
};

struct ClassifyOptions {
    const paperdata::GoldenData* tables = nullptr;  // null: embedded data
};

/// Full pipeline: orbit, nodes, embeddings, levels, KS pairs, names and
/// (main multiplet) annotations. Throws InvalidLabels for negative or
/// non-integral labels.
template <class S>
Multiplet<S> classify(const LabelVector<S>& labels, const ClassifyOptions& opts = {});
Multiplet<Rational> classify(const ConcreteLabels& labels, const ClassifyOptions& opts = {});
Multiplet<LinearForm> classify_symbolic(ZeroPattern pattern, const ClassifyOptions& opts = {});

template <class S>
S c_parameter(const Weight<S>& shifted) {
    return hc_of_shifted(shifted, kEpsilon1) * Rational(-1, 2);
}

/// Embeddings y = x - d*b for noncompact positive b with d = (x, b^v) a
/// positive integer, between nodes of the multiplet.
template <class S>
std::vector<Embedding<S>> derive_edges(const Multiplet<S>& m);

/// Drops every edge implied by a longer path.
template <class S>
std::vector<Embedding<S>> transitive_reduction(const std::vector<Embedding<S>>& edges, std::size_t node_count);

/// Fills degree_form and level. Concrete runs recover the form by
/// replaying each node's word on the probe labels (1, 5, 25, 125).
template <class S>
Multiplet<S> assign_levels(Multiplet<S> m);

template <class S>
Multiplet<S> ks_pairing(Multiplet<S> m);

/// KS pairs joined by an embedding whose degree is a single label m_i.
template <class S>
std::vector<std::pair<std::size_t, std::size_t>> degenerate_ks(const Multiplet<S>& m);

template <class S>
Multiplet<S> name_nodes(Multiplet<S> m, const paperdata::GoldenData& tables);

/// Finite-dimensional and discrete-series nodes of the main multiplet;
/// other kinds are returned unchanged.
template <class S>
Multiplet<S> annotate(Multiplet<S> m);

/// Compares a concrete classification with a symbolic one evaluated at the
/// same labels: nodes, names, signatures, c, edges (with degree forms) and
/// KS pairs. Returns the first difference, or nullopt when they agree.
std::optional<std::string> compare_with_symbolic(const Multiplet<Rational>& concrete,
                                                 const Multiplet<LinearForm>& symbolic);

/// Node name without its trailing sign ("j-" -> "j").
std::string letter_of(const std::string& name);

} // namespace f4gvm
