#include "f4gvm/cli.hpp"

#include "f4gvm/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace f4gvm::cli {

using nlohmann::ordered_json;

namespace {

const char* const kReset = "\033[0m";

std::string paint(const std::string& s, const char* code, bool color) {
    return color ? std::string(code) + s + kReset : s;
}

ordered_json alpha_json(const AlphaCoeffs& a) { return ordered_json::array({a[0], a[1], a[2], a[3]}); }

std::string alpha_text(const AlphaCoeffs& a) {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
           std::to_string(a[3]) + ")";
}

template <class S>
ordered_json values_json(const std::array<S, 4>& v) {
    auto a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_text(x));
    return a;
}

template <class S>
std::string sig_text(const LabelVector<S>& v) {
    return "{" + to_text(v[0]) + ", " + to_text(v[1]) + ", " + to_text(v[2]) + ", " + to_text(v[3]) + "}";
}

template <class S>
std::string compact_text(const GvmNode<S>& n) {
    return "[" + to_text(n.signature[0]) + ", " + to_text(n.signature[1]) + ", " + to_text(n.signature[2]) + "; " +
           to_text(n.c) + "]";
}

std::string doc(const ordered_json& j) { return j.dump(2) + "\n"; }

// Display order: position of the node's name in the main signature table,
// then id.
template <class S>
std::vector<std::size_t> display_order(const Multiplet<S>& m) {
    const auto& rows = paperdata::embedded().signature_table("MAIN")->rows;
    auto rank = [&](const GvmNode<S>& n) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (n.answers_to(rows[i].name)) return i;
        return rows.size();
    };
    std::vector<std::size_t> order(m.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rank(m.nodes[a]) < rank(m.nodes[b]); });
    return order;
}

template <class S>
std::string full_name(const GvmNode<S>& n) {
    std::string s = n.name;
    for (const auto& a : n.aliases) s += "=" + a;
    return s;
}

template <class S>
const char* mode_of() {
    return std::is_same_v<S, Rational> ? "concrete" : "symbolic";
}

template <class S>
std::vector<Embedding<S>> shown_edges(const Multiplet<S>& m, bool reduced) {
    return reduced ? transitive_reduction(m.edges, m.nodes.size()) : m.edges;
}

template <class S>
std::string degree_label(const Embedding<S>& e) {
    return e.level ? "m" + std::to_string(*e.level) : e.degree_form.str();
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

} // namespace

std::string roots_json() {
    const auto& rs = f4();
    ordered_json j;
    j["schema_version"] = "1";
    j["command"] = "roots";
    ordered_json rho_j = ordered_json::array();
    for (const auto& x : rho().alpha) rho_j.push_back(x.str());
    j["rho"] = rho_j;
    std::size_t ncp = 0;
    auto arr = ordered_json::array();
    for (const auto& r : rs.all_roots()) {
        ordered_json e;
        e["alpha"] = alpha_json(r.alpha);
        e["epsilon"] = values_json(alpha_to_eps(Weight<Rational>::from(r.alpha)));
        e["length"] = to_string(r.length);
        e["positive"] = r.positive;
        e["m_compact"] = r.m_compact();
        e["noncompact_positive"] = r.positive && !r.m_compact();
        ncp += r.positive && !r.m_compact();
        arr.push_back(std::move(e));
    }
    j["counts"] = {{"roots", rs.all_roots().size()},
                   {"positive", rs.positive_roots().size()},
                   {"noncompact_positive", ncp}};
    j["roots"] = std::move(arr);
    return doc(j);
}

std::string roots_text() {
    std::ostringstream os;
    os << "F4: " << f4().all_roots().size() << " roots, " << f4().positive_roots().size() << " positive\n";
    os << "rho = " << alpha_text({static_cast<int>(rho().alpha[0].num()), static_cast<int>(rho().alpha[1].num()),
                                  static_cast<int>(rho().alpha[2].num()), static_cast<int>(rho().alpha[3].num())})
       << "\n\n";
    os << pad("alpha", 14) << pad("epsilon", 26) << pad("length", 8) << pad("sign", 6) << "class\n";
    for (const auto& r : f4().all_roots()) {
        const auto e = alpha_to_eps(Weight<Rational>::from(r.alpha));
        os << pad(alpha_text(r.alpha), 14)
           << pad("(" + e[0].str() + "," + e[1].str() + "," + e[2].str() + "," + e[3].str() + ")", 26)
           << pad(to_string(r.length), 8) << pad(r.positive ? "+" : "-", 6)
           << (r.m_compact() ? "compact" : "noncompact") << "\n";
    }
    return os.str();
}

template <class S>
std::string hc_json(const LabelVector<S>& labels) {
    ordered_json j;
    j["schema_version"] = "1";
    j["command"] = "hc";
    j["mode"] = mode_of<S>();
    j["labels"] = values_json(labels);
    auto arr = ordered_json::array();
    for (const auto& e : hc_table(labels)) {
        arr.push_back({{"root", alpha_json(e.root.alpha)},
                       {"simple", e.root.height() == 1},
                       {"length", to_string(e.root.length)},
                       {"value", to_text(e.value)}});
    }
    j["parameters"] = std::move(arr);
    return doc(j);
}

template <class S>
std::string hc_text(const LabelVector<S>& labels) {
    std::ostringstream os;
    os << "Harish-Chandra parameters at m = (" << to_text(labels[0]) << ", " << to_text(labels[1]) << ", "
       << to_text(labels[2]) << ", " << to_text(labels[3]) << ")\n";
    for (const auto& e : hc_table(labels))
        os << pad(alpha_text(e.root.alpha), 12) << pad(to_string(e.root.length), 7) << to_text(e.value) << "\n";
    return os.str();
}

template <class S>
std::string multiplet_json(const Multiplet<S>& m, bool reduced) {
    ordered_json j;
    j["schema_version"] = "1";
    j["command"] = "multiplet";
    j["mode"] = mode_of<S>();
    j["kind"] = m.kind();
    j["labels"] = values_json(m.labels);
    j["orbit_size"] = m.orbit_size;
    j["transitive_reduction"] = reduced;
    const auto degenerate = degenerate_ks(m);
    auto nodes = ordered_json::array();
    for (auto i : display_order(m)) {
        const auto& n = m.nodes[i];
        ordered_json e;
        e["id"] = n.id;
        e["name"] = n.name;
        e["aliases"] = n.aliases;
        e["name_source"] = to_string(n.name_source);
        e["signature"] = values_json(n.signature);
        e["compact"] = {{"triple", ordered_json::array({to_text(n.signature[0]), to_text(n.signature[1]),
                                                        to_text(n.signature[2])})},
                        {"c", to_text(n.c)}};
        e["highest_weight"] = values_json(n.highest_weight().alpha);
        e["m_finite"] = n.m_finite;
        e["finite_dim"] = n.finite_dim;
        e["finite_dim_size"] = n.finite_dim_size ? ordered_json(n.finite_dim_size->str()) : ordered_json(nullptr);
        e["discrete_series"] = n.discrete_series;
        e["ks_partner"] = n.ks_partner ? ordered_json(m.nodes[*n.ks_partner].name) : ordered_json(nullptr);
        nodes.push_back(std::move(e));
    }
    j["nodes"] = std::move(nodes);
    auto edges = ordered_json::array();
    for (const auto& e : shown_edges(m, reduced)) {
        edges.push_back({{"from", m.nodes[e.from].name},
                         {"to", m.nodes[e.to].name},
                         {"degree", to_text(e.degree)},
                         {"degree_form", e.degree_form.str()},
                         {"root", alpha_json(e.root.alpha)},
                         {"level", e.level ? ordered_json(*e.level) : ordered_json(nullptr)}});
    }
    j["edges"] = std::move(edges);
    auto pairs = ordered_json::array();
    for (const auto& [a, b] : m.ks_pairs) {
        const bool deg = std::find(degenerate.begin(), degenerate.end(), std::make_pair(a, b)) != degenerate.end();
        pairs.push_back({{"minus", m.nodes[a].name}, {"plus", m.nodes[b].name}, {"degenerate", deg}});
    }
    j["ks_pairs"] = std::move(pairs);
    auto naming = ordered_json::array();
    for (const auto& r : m.naming)
        naming.push_back({{"name", r.name}, {"source", to_string(r.source)}, {"detail", r.detail}});
    j["naming"] = std::move(naming);
    j["findings"] = m.findings;
    return doc(j);
}

template <class S>
std::string multiplet_text(const Multiplet<S>& m, bool reduced, bool color) {
    const auto edges = shown_edges(m, reduced);
    const auto degenerate = degenerate_ks(m);
    std::ostringstream os;
    os << paint(m.kind(), "\033[1m", color) << " multiplet at m = (" << to_text(m.labels[0]) << ", "
       << to_text(m.labels[1]) << ", " << to_text(m.labels[2]) << ", " << to_text(m.labels[3]) << ")\n";
    os << m.nodes.size() << " nodes (" << m.m_finite_count() << " m_finite) in an orbit of " << m.orbit_size << ", "
       << edges.size() << (reduced ? " arrows after transitive reduction, " : " embeddings, ") << m.ks_pairs.size()
       << " KS pairs\n\n";

    os << paint("nodes", "\033[1m", color) << "\n";
    for (auto i : display_order(m)) {
        const auto& n = m.nodes[i];
        std::string flags;
        if (n.m_finite) flags += " m_finite";
        if (n.finite_dim) flags += " finite-dim" + (n.finite_dim_size ? "(" + n.finite_dim_size->str() + ")" : "");
        if (n.discrete_series) flags += " discrete-series";
        os << "  " << pad(paint(full_name(n), "\033[36m", color), color ? 19 : 10) << pad(sig_text(n.signature), 44)
           << compact_text(n) << flags << "\n";
    }
    os << "\n" << paint("embeddings", "\033[1m", color) << "\n";
    for (const auto& e : edges)
        os << "  " << pad(m.nodes[e.from].name + " -> " + m.nodes[e.to].name, 14) << pad(degree_label(e), 16)
           << alpha_text(e.root.alpha) << (e.level ? "" : paint("  unassigned", "\033[33m", color)) << "\n";
    os << "\n" << paint("KS pairs", "\033[1m", color) << "\n";
    for (const auto& [a, b] : m.ks_pairs) {
        const bool deg = std::find(degenerate.begin(), degenerate.end(), std::make_pair(a, b)) != degenerate.end();
        os << "  " << (a == b ? m.nodes[a].name + " (self)" : m.nodes[a].name + " / " + m.nodes[b].name)
           << (deg ? paint("  degenerate", "\033[35m", color) : "") << "\n";
    }
    if (!m.naming.empty()) {
        os << "\n" << paint("naming", "\033[1m", color) << "\n";
        for (const auto& r : m.naming) os << "  " << pad(r.name, 6) << to_string(r.source) << ": " << r.detail << "\n";
    }
    if (!m.findings.empty()) {
        os << "\n" << paint("findings", "\033[1m", color) << "\n";
        for (const auto& f : m.findings) os << "  " << f << "\n";
    }
    return os.str();
}

template <class S>
std::string multiplet_dot(const Multiplet<S>& m, bool reduced) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << m.kind() << " {\n";
    os << "  rankdir=\"LR\";\n  node [shape=\"box\", fontname=\"monospace\"];\n";
    for (auto i : display_order(m)) {
        const auto& n = m.nodes[i];
        os << "  n" << n.id << " [label=" << quote(full_name(n) + "\\n" + sig_text(n.signature)) << "];\n";
    }
    for (const auto& e : shown_edges(m, reduced))
        os << "  n" << e.from << " -> n" << e.to << " [label=" << quote(degree_label(e) + " " + alpha_text(e.root.alpha))
           << "];\n";
    for (const auto& [a, b] : m.ks_pairs)
        if (a != b) os << "  n" << a << " -> n" << b << " [style=\"dashed\", dir=\"none\"];\n";
    os << "}\n";
    return os.str();
}

std::string report_json(const paperdata::VerificationReport& r) {
    using paperdata::Status;
    ordered_json j;
    j["schema_version"] = "1";
    j["command"] = "verify";
    j["mode"] = r.mode;
    if (r.labels)
        j["labels"] = ordered_json::array({(*r.labels)[0], (*r.labels)[1], (*r.labels)[2], (*r.labels)[3]});
    else
        j["labels"] = nullptr;
    j["status"] = r.passed() ? "PASSED" : "FAILED";
    ordered_json summary;
    for (const auto& [s, n] : r.counts()) summary[to_string(s)] = n;
    j["summary"] = summary;
    auto arr = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json x;
        x["id"] = e.id;
        x["status"] = to_string(e.status);
        x["detail"] = e.detail;
        if (e.status == Status::Allowlisted) x["allowlist"] = e.allowlist_id;
        arr.push_back(std::move(x));
    }
    j["entries"] = std::move(arr);
    return doc(j);
}

std::string report_text(const paperdata::VerificationReport& r, bool color) {
    using paperdata::Status;
    std::ostringstream os;
    for (const auto& e : r.entries) {
        const char* code = e.status == Status::Match        ? "\033[32m"
                           : e.status == Status::Mismatch   ? "\033[31m"
                           : e.status == Status::Allowlisted ? "\033[33m"
                                                             : "\033[2m";
        os << paint(pad(to_string(e.status), 12), code, color) << pad(e.id, 28) << e.detail;
        if (!e.allowlist_id.empty()) os << " [allowlist: " << e.allowlist_id << "]";
        os << "\n";
    }
    const auto c = r.counts();
    os << "\n"
       << r.mode << " verification " << paint(r.passed() ? "PASSED" : "FAILED", r.passed() ? "\033[32m" : "\033[31m", color)
       << ": " << c.at(Status::Match) << " match, " << c.at(Status::Mismatch) << " mismatch, "
       << c.at(Status::Allowlisted) << " allowlisted, " << c.at(Status::Info) << " info\n";
    return os.str();
}

template std::string hc_json(const LabelVector<Rational>&);
template std::string hc_json(const LabelVector<LinearForm>&);
template std::string hc_text(const LabelVector<Rational>&);
template std::string hc_text(const LabelVector<LinearForm>&);
template std::string multiplet_json(const Multiplet<Rational>&, bool);
template std::string multiplet_json(const Multiplet<LinearForm>&, bool);
template std::string multiplet_text(const Multiplet<Rational>&, bool, bool);
template std::string multiplet_text(const Multiplet<LinearForm>&, bool, bool);
template std::string multiplet_dot(const Multiplet<Rational>&, bool);
template std::string multiplet_dot(const Multiplet<LinearForm>&, bool);

} // namespace f4gvm::cli
