#include "f4gvm/multiplet.hpp"

#include "f4gvm/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>
#include <type_traits>

namespace f4gvm {

namespace {

Sign checked_sign(const Rational& v) { return sign_of(v); }

Sign checked_sign(const LinearForm& v) {
    const Sign s = v.sign();
    if (s == Sign::Ambiguous) throw AmbiguousSign("sign of " + v.str() + " is not determined by the labels");
    return s;
}

LinearForm as_form(const Rational& r) { return LinearForm(r); }
LinearForm as_form(const LinearForm& f) { return f; }

std::string flip_sign(const std::string& name) {
    if (name.empty()) return name;
    std::string out = name;
    if (out.back() == '-')
        out.back() = '+';
    else if (out.back() == '+')
        out.back() = '-';
    return out;
}

template <class S>
std::map<Weight<S>, std::size_t> index_of(const Multiplet<S>& m) {
    std::map<Weight<S>, std::size_t> idx;
    for (const auto& n : m.nodes) idx.emplace(n.shifted, n.id);
    return idx;
}

std::string alpha_text(const AlphaCoeffs& a) {
    return std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) + std::to_string(a[3]);
}

} // namespace

const char* to_string(NameSource s) {
    switch (s) {
    case NameSource::Signature: return "signature";
    case NameSource::Compact: return "compact";
    case NameSource::MainAtWall: return "main-at-wall";
    case NameSource::KsPartner: return "ks-partner";
    case NameSource::Synthesized: return "synthesized";
    }
    return "?";
}

std::string letter_of(const std::string& name) {
    if (!name.empty() && (name.back() == '-' || name.back() == '+')) return name.substr(0, name.size() - 1);
    return name;
}

template <class S>
bool GvmNode<S>::answers_to(const std::string& n) const {
    return name == n || std::find(aliases.begin(), aliases.end(), n) != aliases.end();
}

template <class S>
std::size_t Multiplet<S>::m_finite_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.m_finite; }));
}

template <class S>
const GvmNode<S>* Multiplet<S>::find(const std::string& name) const {
    for (const auto& n : nodes)
        if (n.answers_to(name)) return &n;
    return nullptr;
}

template <class S>
std::vector<Embedding<S>> derive_edges(const Multiplet<S>& m) {
    static const auto noncompact = m_split(f4()).second;
    const auto idx = index_of(m);
    std::vector<Embedding<S>> out;
    for (const auto& n : m.nodes) {
        for (const auto& beta : noncompact) {
            const S d = hc_of_shifted(n.shifted, beta.alpha);
            if (checked_sign(d) != Sign::Positive || !is_integral(d)) continue;
            auto it = idx.find(reflect(n.shifted, beta));
            if (it == idx.end()) continue;
            Embedding<S> e;
            e.from = n.id;
            e.to = it->second;
            e.root = beta;
            e.degree = d;
            e.degree_form = as_form(d);
            out.push_back(std::move(e));
        }
    }
    return out;
}

template <class S>
std::vector<Embedding<S>> transitive_reduction(const std::vector<Embedding<S>>& edges, std::size_t node_count) {
    std::vector<std::vector<std::size_t>> succ(node_count);
    for (const auto& e : edges) succ.at(e.from).push_back(e.to);
    auto reachable_avoiding = [&](std::size_t from, std::size_t to) {
        std::vector<char> seen(node_count, 0);
        std::vector<std::size_t> stack;
        for (auto s : succ[from])
            if (s != to && !seen[s]) seen[s] = 1, stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (auto s : succ[v])
                if (!seen[s]) seen[s] = 1, stack.push_back(s);
        }
        return false;
    };
    std::vector<Embedding<S>> out;
    for (const auto& e : edges)
        if (!reachable_avoiding(e.from, e.to)) out.push_back(e);
    return out;
}

template <class S>
Multiplet<S> assign_levels(Multiplet<S> m) {
    if constexpr (std::is_same_v<S, Rational>) {
        LabelVector<Rational> probe{};
        std::int64_t base = 1;
        for (int i = 0; i < 4; ++i, base *= 5) probe[i] = m.pattern.pinned(i + 1) ? 0 : base;
        const auto x0 = shifted_weight(probe);
        for (auto& e : m.edges) {
            const auto xp = apply_word(f4(), m.nodes[e.from].word, x0);
            const Rational v = hc_of_shifted(xp, e.root.alpha);
            if (!v.is_integer() || v.sign() <= 0) throw std::logic_error("probe degree is not a positive integer");
            std::int64_t n = v.num();
            LinearForm form;
            for (int i = 0; i < 4; ++i, n /= 5) form += LinearForm::generator(i + 1) * Rational(n % 5);
            if (n != 0 || form.evaluate(m.labels) != e.degree)
                throw std::logic_error("probe degree " + v.str() + " does not decode to the degree " + e.degree.str());
            e.degree_form = form;
        }
    } else {
        for (auto& e : m.edges) e.degree_form = e.degree;
    }
    for (auto& e : m.edges) e.level = e.degree_form.generator_index();
    return m;
}

template <class S>
Multiplet<S> ks_pairing(Multiplet<S> m) {
    const auto idx = index_of(m);
    m.ks_pairs.clear();
    for (auto& n : m.nodes) {
        auto it = idx.find(reflect(n.shifted, kEpsilon1));
        if (it == idx.end()) {
            m.findings.push_back("node " + std::to_string(n.id) + " has no KS partner among the nodes");
            n.ks_partner.reset();
            continue;
        }
        n.ks_partner = it->second;
    }
    for (const auto& n : m.nodes) {
        if (!n.ks_partner || *n.ks_partner < n.id) continue;
        const auto p = *n.ks_partner;
        if (p == n.id)
            m.ks_pairs.emplace_back(n.id, n.id);
        else if (checked_sign(n.c) == Sign::Negative)
            m.ks_pairs.emplace_back(n.id, p);
        else
            m.ks_pairs.emplace_back(p, n.id);
    }
    return m;
}

template <class S>
std::vector<std::pair<std::size_t, std::size_t>> degenerate_ks(const Multiplet<S>& m) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [a, b] : m.ks_pairs) {
        if (a == b) continue;
        const bool hit = std::any_of(m.edges.begin(), m.edges.end(), [&](const Embedding<S>& e) {
            return e.level && ((e.from == a && e.to == b) || (e.from == b && e.to == a));
        });
        if (hit) out.emplace_back(a, b);
    }
    return out;
}

template <class S>
Multiplet<S> name_nodes(Multiplet<S> m, const paperdata::GoldenData& tables) {
    const std::string kind = m.kind();
    for (auto& n : m.nodes) {
        n.name.clear();
        n.aliases.clear();
        n.name_source = NameSource::Synthesized;
    }
    m.naming.clear();
    auto taken = [&](const std::string& name) {
        return std::any_of(m.nodes.begin(), m.nodes.end(), [&](const auto& n) { return n.answers_to(name); });
    };
    auto assign = [&](GvmNode<S>& n, std::string name, std::vector<std::string> aliases, NameSource src,
                      std::string detail) {
        if (taken(name)) {
            m.findings.push_back("name " + name + " (" + to_string(src) + ") already used; node " +
                                 std::to_string(n.id) + " left for the next rule");
            return;
        }
        n.name = std::move(name);
        n.aliases = std::move(aliases);
        n.name_source = src;
        if (src != NameSource::Signature) m.naming.push_back({n.id, n.name, src, std::move(detail)});
    };

    const auto* sig = tables.signature_table(kind);
    if (sig) {
        for (const auto& ns : paperdata::expected_signatures(tables, kind, m.labels)) {
            for (auto& n : m.nodes)
                if (n.signature == ns.signature && n.name.empty())
                    assign(n, ns.name, ns.aliases, NameSource::Signature, {});
        }
    }

    if (const auto* comp = tables.compact_table(kind)) {
        for (const auto& row : comp->rows) {
            LabelVector<S> triple{};
            for (int i = 0; i < 3; ++i) triple[i] = paperdata::substitute(row.fields[i].form, m.labels);
            const S mag = paperdata::substitute(row.fields[3].form, m.labels);
            for (auto& n : m.nodes) {
                if (!n.name.empty()) continue;
                if (n.signature[0] != triple[0] || n.signature[1] != triple[1] || n.signature[2] != triple[2])
                    continue;
                const char* suffix = n.c == mag ? "+" : n.c == S{} - mag ? "-" : nullptr;
                if (!suffix) continue;
                const std::string name = row.name + suffix;
                std::vector<std::string> aliases;
                if (sig)
                    if (const auto* r = sig->find(name)) {
                        if (r->name != name) aliases.push_back(r->name);
                        for (const auto& a : r->aliases)
                            if (a != name) aliases.push_back(a);
                    }
                assign(n, name, aliases, NameSource::Compact,
                       "no printed signature row matches " + name + "; identified by its compact row");
            }
        }
    }

    if (!m.pattern.empty()) {
        const auto main_rows = paperdata::expected_signatures(tables, "MAIN", m.labels);
        for (auto& n : m.nodes) {
            if (!n.name.empty()) continue;
            std::vector<std::string> hits;
            for (const auto& ns : main_rows)
                if (ns.signature == n.signature) hits.push_back(ns.name);
            if (hits.empty()) continue;
            const std::string name = hits.front();
            hits.erase(hits.begin());
            assign(n, name, hits, NameSource::MainAtWall, "named by the main signature table on the wall");
        }
    }

    for (auto& n : m.nodes) {
        if (!n.name.empty() || !n.ks_partner) continue;
        const auto& p = m.nodes[*n.ks_partner];
        if (p.name.empty() || p.name_source == NameSource::KsPartner) continue;
        if (p.name.back() != '-' && p.name.back() != '+') continue;
        std::vector<std::string> aliases;
        for (const auto& a : p.aliases) aliases.push_back(flip_sign(a));
        assign(n, flip_sign(p.name), aliases, NameSource::KsPartner,
               "no printed row matches; named after its KS partner " + p.name);
    }

    for (auto& n : m.nodes)
        if (n.name.empty()) assign(n, "n" + std::to_string(n.id), {}, NameSource::Synthesized, "no rule applies");
    return m;
}

template <class S>
Multiplet<S> annotate(Multiplet<S> m) {
    if (!m.pattern.empty()) return m;
    static const RootSystem b4 = subsystem(f4(), SubsystemKind::B4);
    static const std::size_t expected_discrete = group_order(f4()) / group_order(b4);
    std::size_t finite = 0, discrete = 0;
    for (auto& n : m.nodes) {
        n.finite_dim = std::all_of(n.signature.begin(), n.signature.end(),
                                   [](const S& v) { return checked_sign(v) == Sign::Positive; });
        if (n.finite_dim) {
            ++finite;
            if constexpr (std::is_same_v<S, Rational>) {
                ConcreteLabels c{};
                for (int i = 0; i < 4; ++i) c[i] = m.labels[i].num();
                n.finite_dim_size = weyl_dim(c);
            }
        }
    }
    for (const auto& n : m.nodes) {
        const bool dominant = std::all_of(b4.positive_roots().begin(), b4.positive_roots().end(), [&](const auto& r) {
            return checked_sign(hc_of_shifted(n.shifted, r.alpha)) == Sign::Positive;
        });
        if (dominant && n.ks_partner) {
            m.nodes[*n.ks_partner].discrete_series = true;
            ++discrete;
        }
    }
    if (finite != 1)
        m.findings.push_back(std::to_string(finite) + " nodes carry a finite-dimensional subrepresentation");
    if (discrete != expected_discrete)
        m.findings.push_back(std::to_string(discrete) + " discrete-series nodes, expected " +
                             std::to_string(expected_discrete));
    return m;
}

template <class S>
Multiplet<S> classify(const LabelVector<S>& labels, const ClassifyOptions& opts) {
    Multiplet<S> m;
    m.labels = labels;
    m.pattern = zero_pattern_of(labels);
    const auto orb = orbit(f4(), shifted_weight(labels), OrbitOptions{true});
    m.orbit_size = orb.points.size();
    for (std::size_t i = 0; i < orb.points.size(); ++i) {
        const auto sig = labels_of_shifted(orb.points[i]);
        bool node = true, fin = true;
        for (int k = 0; k < 3; ++k) {
            const Sign s = checked_sign(sig[k]);
            node = node && s != Sign::Negative;
            fin = fin && s == Sign::Positive;
        }
        if (!node) continue;
        GvmNode<S> n;
        n.id = m.nodes.size();
        n.shifted = orb.points[i];
        n.word = orb.words[i];
        n.signature = sig;
        n.c = c_parameter(n.shifted);
        n.m_finite = fin;
        m.nodes.push_back(std::move(n));
    }
    m.edges = derive_edges(m);
    m = assign_levels(std::move(m));
    m = ks_pairing(std::move(m));
    m = name_nodes(std::move(m), opts.tables ? *opts.tables : paperdata::embedded());
    m = annotate(std::move(m));
    if (m.pattern.empty()) {
        for (const auto& e : transitive_reduction(m.edges, m.nodes.size()))
            if (!e.level)
                m.findings.push_back("diagram arrow " + m.nodes[e.from].name + " -> " + m.nodes[e.to].name +
                                     " along " + alpha_text(e.root.alpha) + " has degree " +
                                     e.degree_form.str() + ", not a single label");
    }
    return m;
}

Multiplet<Rational> classify(const ConcreteLabels& labels, const ClassifyOptions& opts) {
    return classify(concrete_labels(labels), opts);
}

Multiplet<LinearForm> classify_symbolic(ZeroPattern pattern, const ClassifyOptions& opts) {
    return classify(symbolic_labels(pattern), opts);
}

std::optional<std::string> compare_with_symbolic(const Multiplet<Rational>& concrete,
                                                 const Multiplet<LinearForm>& symbolic) {
    const auto& at = concrete.labels;
    if (concrete.pattern != symbolic.pattern) return "zero patterns differ";
    if (concrete.orbit_size != symbolic.orbit_size) return "orbit sizes differ";
    if (concrete.nodes.size() != symbolic.nodes.size()) return "node counts differ";

    struct NodeKey {
        std::string name;
        LabelVector<Rational> signature;
        Rational c;
        bool m_finite, finite_dim, discrete_series;
        auto operator<=>(const NodeKey&) const = default;
    };
    std::map<Weight<Rational>, NodeKey> cn, sn;
    for (const auto& n : concrete.nodes)
        cn[n.shifted] = {n.name, n.signature, n.c, n.m_finite, n.finite_dim, n.discrete_series};
    for (const auto& n : symbolic.nodes) {
        LabelVector<Rational> sig;
        for (int i = 0; i < 4; ++i) sig[i] = n.signature[i].evaluate(at);
        sn[evaluate(n.shifted, at)] = {n.name, sig, n.c.evaluate(at), n.m_finite, n.finite_dim, n.discrete_series};
    }
    if (cn.size() != concrete.nodes.size() || sn.size() != symbolic.nodes.size())
        return "evaluated symbolic nodes collide";
    for (const auto& [w, key] : cn) {
        auto it = sn.find(w);
        if (it == sn.end()) return "node " + key.name + " " + w.str() + " missing from the symbolic multiplet";
        if (!(it->second == key)) return "node " + key.name + " differs from its symbolic counterpart " + it->second.name;
    }

    using EdgeKey = std::tuple<Weight<Rational>, Weight<Rational>, AlphaCoeffs, Rational, LinearForm>;
    std::set<EdgeKey> ce, se;
    for (const auto& e : concrete.edges)
        ce.emplace(concrete.nodes[e.from].shifted, concrete.nodes[e.to].shifted, e.root.alpha, e.degree, e.degree_form);
    for (const auto& e : symbolic.edges)
        se.emplace(evaluate(symbolic.nodes[e.from].shifted, at), evaluate(symbolic.nodes[e.to].shifted, at),
                   e.root.alpha, e.degree.evaluate(at), e.degree_form);
    if (ce != se) return "edge sets differ (" + std::to_string(ce.size()) + " vs " + std::to_string(se.size()) + ")";

    std::set<std::pair<Weight<Rational>, Weight<Rational>>> cp, sp;
    for (const auto& [a, b] : concrete.ks_pairs) cp.emplace(concrete.nodes[a].shifted, concrete.nodes[b].shifted);
    for (const auto& [a, b] : symbolic.ks_pairs)
        sp.emplace(evaluate(symbolic.nodes[a].shifted, at), evaluate(symbolic.nodes[b].shifted, at));
    if (cp != sp) return "KS pairs differ";
    return std::nullopt;
}

#define F4GVM_INSTANTIATE(S)                                                                               \
    template struct GvmNode<S>;                                                                            \
    template struct Multiplet<S>;                                                                          \
    template Multiplet<S> classify(const LabelVector<S>&, const ClassifyOptions&);                         \
    template std::vector<Embedding<S>> derive_edges(const Multiplet<S>&);                                  \
    template std::vector<Embedding<S>> transitive_reduction(const std::vector<Embedding<S>>&, std::size_t); \
    template Multiplet<S> assign_levels(Multiplet<S>);                                                     \
    template Multiplet<S> ks_pairing(Multiplet<S>);                                                        \
    template std::vector<std::pair<std::size_t, std::size_t>> degenerate_ks(const Multiplet<S>&);          \
    template Multiplet<S> name_nodes(Multiplet<S>, const paperdata::GoldenData&);                          \
    template Multiplet<S> annotate(Multiplet<S>);

F4GVM_INSTANTIATE(Rational)
F4GVM_INSTANTIATE(LinearForm)

#undef F4GVM_INSTANTIATE

} // namespace f4gvm
