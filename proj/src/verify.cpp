#include "f4gvm/verify.hpp"

#include "f4gvm/errors.hpp"
#include "f4gvm/multiplet.hpp"
#include "f4gvm/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace f4gvm::paperdata {

namespace {

const char* const kTableKinds[] = {"MAIN", "M1", "M2", "M3", "M4", "M13", "M24", "M34"};
const char* const kExtraKinds[] = {"M12", "M14", "M23"};

std::string vec_text(const AlphaCoeffs& a) {
    return std::to_string(a[0]) + " " + std::to_string(a[1]) + " " + std::to_string(a[2]) + " " + std::to_string(a[3]);
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

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out.empty() ? "(none)" : out;
}

std::string row_id(const FormulaRow& r) {
    std::string id = r.name;
    for (const auto& a : r.aliases) id += "=" + a;
    return id;
}

template <class S>
S absolute(const S& v) {
    return sign_of(v) == Sign::Negative ? S{} - v : v;
}

class Report {
public:
    void add(std::string id, bool ok, std::string detail) {
        entries.push_back({std::move(id), ok ? Status::Match : Status::Mismatch, std::move(detail), {}});
    }
    void info(std::string id, std::string detail) {
        entries.push_back({std::move(id), Status::Info, std::move(detail), {}});
    }
    std::vector<ReportEntry> entries;
};

template <class S>
class Checker {
public:
    Checker(const GoldenData& data, std::function<LabelVector<S>(ZeroPattern)> labels_for, Report& out)
        : data_(data), labels_for_(std::move(labels_for)), out_(out) {}

    void roots() {
        const auto& rs = f4();
        const auto pos = rs.positive_roots();
        out_.add("roots/count", rs.all_roots().size() == 48 && pos.size() == 24,
                 std::to_string(rs.all_roots().size()) + " roots, " + std::to_string(pos.size()) + " positive");

        std::vector<AlphaCoeffs> lg, sh;
        for (const auto& r : pos) (r.length == LengthClass::Long ? lg : sh).push_back(r.alpha);
        listing("roots/long", lg, data_.roots.long_roots);
        listing("roots/short", sh, data_.roots.short_roots);

        const auto r = rho();
        AlphaCoeffs rv{};
        bool integral = true;
        for (int i = 0; i < 4; ++i) {
            integral = integral && r.alpha[i].is_integer();
            rv[i] = static_cast<int>(r.alpha[i].num());
        }
        out_.add("roots/rho", integral && rv == data_.roots.rho,
                 "derived " + r.str() + ", printed (" + vec_text(data_.roots.rho) + ")");

        const auto [compact, noncompact] = m_split(rs);
        std::vector<AlphaCoeffs> c, n, pc, pn;
        for (const auto& x : compact) c.push_back(x.alpha);
        for (const auto& x : noncompact) n.push_back(x.alpha);
        for (const auto& x : data_.roots.compact) pc.push_back(x.root);
        for (const auto& x : data_.roots.noncompact) pn.push_back(x.root);
        listing("roots/compact", c, pc);
        listing("roots/noncompact", n, pn);

        for (const auto* list : {&data_.roots.compact, &data_.roots.noncompact})
            for (const auto& lr : *list) {
                const auto e = parse_root_token(lr.label);
                out_.add("roots/label/" + vec_text(lr.root), e == lr.root,
                         "label '" + lr.label + "' expands to " + vec_text(e));
            }
    }

    void weyl() {
        const auto b4 = subsystem(f4(), SubsystemKind::B4);
        const auto b3 = subsystem(f4(), SubsystemKind::B3);
        const std::pair<const char*, const RootSystem*> groups[] = {{"F4", &f4()}, {"B4", &b4}, {"B3", &b3}};
        for (const auto& [name, rs] : groups) {
            const auto order = group_order(*rs);
            auto it = data_.structure.weyl_orders.find(name);
            const bool stated = it != data_.structure.weyl_orders.end();
            out_.add(std::string("weyl/") + name, stated && it->second == order,
                     "orbit of rho has " + std::to_string(order) + " points" +
                         (stated ? ", printed " + std::to_string(it->second) : ", no printed order"));
        }
        const auto q = group_order(f4()) / group_order(b4);
        const auto ds = data_.structure.discrete.count("MAIN") ? data_.structure.discrete.at("MAIN").size() : 0;
        out_.add("weyl/discrete-count", q == ds,
                 "|W(F4)|/|W(B4)| = " + std::to_string(q) + ", printed discrete-series nodes " + std::to_string(ds));
    }

    void weight() {
        const auto labels = labels_for_(ZeroPattern{});
        const auto lambda = weight_from_labels(labels);
        for (const auto& [i, form] : data_.structure.weight) {
            const std::string id = "weight/lambda" + std::to_string(i);
            if (i < 1 || i > 4) {
                out_.add(id, false, "no such coordinate");
                continue;
            }
            const S printed = substitute(form, labels);
            out_.add(id, printed == lambda.alpha[i - 1],
                     "derived " + to_text(lambda.alpha[i - 1]) + ", printed " + form.str());
        }
    }

    void hc() {
        const auto labels = labels_for_(ZeroPattern{});
        const auto table = hc_table(labels);
        for (const auto& cf : data_.roots.hc) {
            const std::string id = "hc/" + vec_text(cf.root);
            auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.root.alpha == cf.root; });
            if (it == table.end()) {
                out_.add(id, false, "not a positive root");
                continue;
            }
            const S printed = substitute(cf.form, labels);
            out_.add(id, it->value == printed, "derived " + to_text(it->value) + ", printed " + cf.shorthand);
        }
    }

    Multiplet<S> kind(const std::string& k, bool tabled) {
        ClassifyOptions co;
        co.tables = &data_;
        auto mp = classify(labels_for_(ZeroPattern::from_kind(k)), co);
        counts(k, mp, tabled);
        if (!tabled) {
            out_.info(k + "/degenerate", "degenerate KS pairs: " + join(degenerate_names(mp, false)));
            return mp;
        }
        signatures(k, mp);
        compact(k, mp);
        ks(k, mp);
        degenerate(k, mp);
        const std::string dk = k == "MAIN" ? "JK" : k;
        if (data_.diagrams.count(dk)) diagram(k, mp, data_.diagrams.at(dk));
        if (k == "MAIN") annotations(mp);
        for (const auto& r : mp.naming)
            out_.info(k + "/naming/" + r.name, std::string(to_string(r.source)) + ": " + r.detail);
        for (std::size_t i = 0; i < mp.findings.size(); ++i)
            out_.info(k + "/finding/" + std::to_string(i + 1), mp.findings[i]);
        return mp;
    }

private:
    void listing(const std::string& id, std::vector<AlphaCoeffs> derived, std::vector<AlphaCoeffs> printed) {
        std::sort(derived.begin(), derived.end());
        std::sort(printed.begin(), printed.end());
        const bool dup = std::adjacent_find(printed.begin(), printed.end()) != printed.end();
        out_.add(id, derived == printed && !dup,
                 std::to_string(derived.size()) + " derived, " + std::to_string(printed.size()) + " printed" +
                     (derived == printed ? ", equal as sets" : ", sets differ"));
    }

    void counts(const std::string& k, const Multiplet<S>& mp, bool tabled) {
        const auto nodes = mp.nodes.size();
        const auto fin = mp.m_finite_count();
        auto it = data_.structure.counts.find(k);
        if (tabled && it != data_.structure.counts.end()) {
            if (it->second.nodes)
                out_.add(k + "/count/nodes", nodes == static_cast<std::size_t>(*it->second.nodes),
                         std::to_string(nodes) + " nodes, printed " + std::to_string(*it->second.nodes));
            else
                out_.info(k + "/count/nodes", std::to_string(nodes) + " nodes (no printed count)");
            out_.add(k + "/count/m_finite", fin == static_cast<std::size_t>(it->second.m_finite),
                     std::to_string(fin) + " m_finite nodes, printed " + std::to_string(it->second.m_finite));
        } else {
            out_.info(k + "/count/nodes", std::to_string(nodes) + " nodes in an orbit of " +
                                              std::to_string(mp.orbit_size));
            out_.info(k + "/count/m_finite", std::to_string(fin) + " m_finite nodes");
        }
    }

    void signatures(const std::string& k, const Multiplet<S>& mp) {
        for (const auto& row : data_.signature_table(k)->rows) {
            LabelVector<S> sig;
            for (int i = 0; i < 4; ++i) sig[i] = substitute(row.fields[i].form, mp.labels);
            const std::string id = k + "/signature/" + row_id(row);
            auto it = std::find_if(mp.nodes.begin(), mp.nodes.end(), [&](const auto& n) { return n.signature == sig; });
            if (it != mp.nodes.end()) {
                out_.add(id, true, "node " + it->name + " " + sig_text(sig));
                continue;
            }
            std::string detail = "printed " + sig_text(sig) + " is not a node";
            if (const auto* n = mp.find(row.name)) {
                detail += "; derived " + n->name + " = " + sig_text(n->signature);
                for (int i = 0; i < 4; ++i)
                    if (n->signature[i] != sig[i])
                        detail += "; m'" + std::to_string(i + 1) + " printed - derived = " +
                                  to_text(sig[i] - n->signature[i]);
            }
            out_.add(id, false, detail);
        }
    }

    void compact(const std::string& k, const Multiplet<S>& mp) {
        const auto* table = data_.compact_table(k);
        if (!table) return;
        for (const auto& row : table->rows) {
            LabelVector<S> t{};
            for (int i = 0; i < 3; ++i) t[i] = substitute(row.fields[i].form, mp.labels);
            const S mag = substitute(row.fields[3].form, mp.labels);
            for (const char* sign : {"-", "+"}) {
                const S c = sign[0] == '-' ? S{} - mag : mag;
                const std::string name = row.name + sign;
                auto it = std::find_if(mp.nodes.begin(), mp.nodes.end(), [&](const auto& n) {
                    return n.signature[0] == t[0] && n.signature[1] == t[1] && n.signature[2] == t[2] && n.c == c;
                });
                const std::string printed =
                    "[" + to_text(t[0]) + ", " + to_text(t[1]) + ", " + to_text(t[2]) + "; " + to_text(c) + "]";
                if (it != mp.nodes.end()) {
                    out_.add(k + "/compact/" + name, true, "node " + it->name + " " + printed);
                    continue;
                }
                std::string detail = "printed " + printed + " is not a node";
                if (const auto* n = mp.find(name)) detail += "; derived " + n->name + " = " + compact_text(*n);
                out_.add(k + "/compact/" + name, false, detail);
            }
        }
    }

    void ks(const std::string& k, const Multiplet<S>& mp) {
        std::size_t proper = 0, self = 0;
        bool ok = true;
        for (const auto& [a, b] : mp.ks_pairs) {
            const auto& x = mp.nodes[a];
            const auto& y = mp.nodes[b];
            ok = ok && x.signature[0] == y.signature[0] && x.signature[1] == y.signature[1] &&
                 x.signature[2] == y.signature[2] && x.c == S{} - y.c;
            (a == b ? self : proper) += 1;
        }
        ok = ok && 2 * proper + self == mp.nodes.size();
        if (k == "MAIN") ok = ok && self == 0 && proper == 12;
        out_.add(k + "/ks", ok,
                 std::to_string(proper) + " pairs, " + std::to_string(self) +
                     " self-partnered; compact triples equal and c negated within pairs");
    }

    std::vector<std::string> degenerate_names(const Multiplet<S>& mp, bool m_finite_only) {
        std::vector<std::string> out;
        for (const auto& [a, b] : degenerate_ks(mp)) {
            if (m_finite_only && !(mp.nodes[a].m_finite && mp.nodes[b].m_finite)) continue;
            const auto la = letter_of(mp.nodes[a].name), lb = letter_of(mp.nodes[b].name);
            out.push_back(la == lb ? la : la + "/" + lb);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void degenerate(const std::string& k, const Multiplet<S>& mp) {
        auto derived = degenerate_names(mp, k != "MAIN");
        std::vector<std::string> printed;
        if (auto it = data_.structure.degenerate.find(k); it != data_.structure.degenerate.end()) printed = it->second;
        std::sort(printed.begin(), printed.end());
        out_.add(k + "/degenerate", derived == printed, "derived " + join(derived) + ", printed " + join(printed));
    }

    void diagram(const std::string& k, const Multiplet<S>& mp, const std::vector<DiagramArrow>& arrows) {
        for (const auto& a : arrows) {
            const std::string id = k + "/diagram/" + a.from + "->" + a.to;
            const auto* from = mp.find(a.from);
            const auto* to = mp.find(a.to);
            if (!from || !to) {
                out_.add(id, false, "no node named " + (from ? a.to : a.from));
                continue;
            }
            const bool identity = f4().contains(a.resolved_root) && reflect(from->shifted, a.resolved_root) == to->shifted;
            auto e = std::find_if(mp.edges.begin(), mp.edges.end(), [&](const auto& x) {
                return x.from == from->id && x.to == to->id && x.root.alpha == a.resolved_root;
            });
            if (!identity || e == mp.edges.end()) {
                out_.add(id, false,
                         std::string("no derived embedding along ") + vec_text(a.resolved_root) +
                             (identity ? "" : " (reflection identity fails)"));
                continue;
            }
            if (e->degree_form != a.degree.form) {
                out_.add(id, false, "derived degree " + e->degree_form.str() + ", printed " + a.degree.form.str());
                continue;
            }
            const std::string got = "degree " + e->degree_form.str() + " along " + vec_text(a.resolved_root);
            if (a.token_root != a.resolved_root) {
                const bool token_ok = f4().contains(a.token_root) && reflect(from->shifted, a.token_root) == to->shifted;
                out_.add(id, token_ok,
                         got + "; printed root '" + a.root_token + "' expands to " + vec_text(a.token_root) +
                             (token_ok ? "" : ", which fails the reflection identity"));
                continue;
            }
            out_.add(id, true, got);
        }
    }

    void annotations(const Multiplet<S>& mp) {
        std::vector<std::string> fin, ds;
        for (const auto& n : mp.nodes) {
            if (n.finite_dim) fin.push_back(n.name);
            if (n.discrete_series) ds.push_back(n.name);
        }
        std::sort(fin.begin(), fin.end());
        std::sort(ds.begin(), ds.end());
        auto pf = data_.structure.finite.count("MAIN") ? data_.structure.finite.at("MAIN") : std::vector<std::string>{};
        auto pd = data_.structure.discrete.count("MAIN") ? data_.structure.discrete.at("MAIN") : std::vector<std::string>{};
        std::sort(pf.begin(), pf.end());
        std::sort(pd.begin(), pd.end());
        out_.add("MAIN/finite", fin == pf, "derived " + join(fin) + ", printed " + join(pf));
        out_.add("MAIN/discrete", ds == pd, "derived " + join(ds) + ", printed " + join(pd));
        for (const auto& n : mp.nodes)
            if (n.finite_dim_size) out_.info("MAIN/finite-dimension", n.name + ": " + n.finite_dim_size->str());

        for (const auto& [a, b] : mp.ks_pairs) {
            const auto& x = mp.nodes[a];
            const auto& y = mp.nodes[b];
            const S lhs = absolute(x.c) + absolute(y.c);
            const S rhs = absolute(x.signature[3]) + absolute(y.signature[3]);
            out_.info("MAIN/relation/" + letter_of(x.name),
                      std::string(lhs == rhs ? "holds" : "fails") + ": |c+| + |c-| = " + to_text(lhs) +
                          ", |m'4+| + |m'4-| = " + to_text(rhs));
        }
    }

    const GoldenData& data_;
    std::function<LabelVector<S>(ZeroPattern)> labels_for_;
    Report& out_;
};

template <class S>
std::vector<Multiplet<S>> run_all(Checker<S>& ch) {
    ch.roots();
    ch.weyl();
    ch.weight();
    ch.hc();
    std::vector<Multiplet<S>> out;
    for (const char* k : kTableKinds) out.push_back(ch.kind(k, true));
    for (const char* k : kExtraKinds) out.push_back(ch.kind(k, false));
    return out;
}

void apply_allowlist(std::vector<ReportEntry>& entries, const std::vector<AllowlistEntry>& allow, bool require_all) {
    std::set<std::string> used;
    for (auto& e : entries) {
        if (e.status != Status::Mismatch) continue;
        auto it = std::find_if(allow.begin(), allow.end(), [&](const auto& a) { return a.item == e.id; });
        if (it == allow.end()) continue;
        e.status = Status::Allowlisted;
        e.allowlist_id = it->id;
        used.insert(it->id);
    }
    for (const auto& a : allow) {
        if (used.count(a.id)) continue;
        entries.push_back({"allowlist/" + a.id, require_all ? Status::Mismatch : Status::Info,
                           "entry for " + a.item + " not exercised", {}});
    }
}

} // namespace

const char* to_string(Status s) {
    switch (s) {
    case Status::Match: return "MATCH";
    case Status::Mismatch: return "MISMATCH";
    case Status::Allowlisted: return "ALLOWLISTED";
    case Status::Info: return "INFO";
    }
    return "?";
}

std::map<Status, std::size_t> VerificationReport::counts() const {
    std::map<Status, std::size_t> c{{Status::Match, 0}, {Status::Mismatch, 0}, {Status::Allowlisted, 0}, {Status::Info, 0}};
    for (const auto& e : entries) ++c[e.status];
    return c;
}

bool VerificationReport::passed() const {
    return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::Mismatch; });
}

const ReportEntry* VerificationReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

VerificationReport verify_symbolic(const VerifyOptions& opts) {
    const auto& data = opts.data ? *opts.data : embedded();
    Report out;
    Checker<LinearForm> ch(data, [](ZeroPattern p) { return symbolic_labels(p); }, out);
    run_all(ch);
    apply_allowlist(out.entries, opts.allowlist ? *opts.allowlist : data.allowlist, true);
    return {"symbolic", std::nullopt, std::move(out.entries)};
}

VerificationReport verify_concrete(const ConcreteLabels& labels, const VerifyOptions& opts) {
    for (int i = 0; i < 4; ++i)
        if (labels[i] < 1)
            throw InvalidLabels("concrete verification needs every label >= 1, got m" + std::to_string(i + 1) + " = " +
                                std::to_string(labels[i]));
    const auto& data = opts.data ? *opts.data : embedded();
    Report out;
    auto at = [&](ZeroPattern p) {
        ConcreteLabels m = labels;
        for (int i = 0; i < 4; ++i)
            if (p.pinned(i + 1)) m[i] = 0;
        return concrete_labels(m);
    };
    Checker<Rational> ch(data, at, out);
    const auto concrete = run_all(ch);
    ClassifyOptions co;
    co.tables = &data;
    for (const auto& mp : concrete) {
        const auto sym = classify_symbolic(mp.pattern, co);
        const auto diff = compare_with_symbolic(mp, sym);
        out.add(mp.kind() + "/consistency", !diff,
                diff ? *diff : "nodes, names, edges and KS pairs equal the symbolic multiplet evaluated here");
    }
    apply_allowlist(out.entries, opts.allowlist ? *opts.allowlist : data.allowlist, false);
    return {"concrete", labels, std::move(out.entries)};
}

} // namespace f4gvm::paperdata
