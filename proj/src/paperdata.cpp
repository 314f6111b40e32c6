#include "f4gvm/paperdata.hpp"

#include "f4gvm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace f4gvm::paperdata {

namespace {

struct Row {
    std::string section;
    std::vector<std::string> fields;
    int line = 0;
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string_view::npos ? s.npos : p - start)));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& what) {
    throw GoldenDataError(file + ":" + std::to_string(line) + ": " + what);
}

std::vector<Row> rows_of(const std::string& file, std::string_view text, std::size_t max_fields = 0,
                         bool sectioned = true) {
    std::vector<Row> out;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
        pos = nl == text.npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto h = raw.find('#'); h != raw.npos) raw = raw.substr(0, h);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(file, line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (sectioned && section.empty()) fail(file, line_no, "row outside of a section");
        auto fields = split(line, '|');
        if (max_fields && fields.size() > max_fields) {
            for (std::size_t i = max_fields; i < fields.size(); ++i) fields[max_fields - 1] += " | " + fields[i];
            fields.resize(max_fields);
        }
        out.push_back({section, std::move(fields), line_no});
    }
    return out;
}

void expect_fields(const std::string& file, const Row& r, std::size_t n) {
    if (r.fields.size() != n)
        fail(file, r.line, "expected " + std::to_string(n) + " fields, got " + std::to_string(r.fields.size()));
}

LinearForm atom_form(const std::string& atom) {
    static const char* const known[] = {"0", "1", "2", "3", "4", "12", "13", "14", "23", "24", "34"};
    if (std::find(std::begin(known), std::end(known), atom) == std::end(known))
        throw GoldenDataError("unknown m-shorthand atom '" + atom + "'");
    LinearForm f;
    if (atom == "0") return f;
    const int i = atom[0] - '0';
    const int j = atom.size() == 2 ? atom[1] - '0' : i;
    for (int k = i; k <= j; ++k) f += LinearForm::generator(k);
    return f;
}

std::size_t scan_digits(const std::string& s, std::size_t p) {
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p;
}

AlphaCoeffs ints4(const std::string& file, const Row& r, const std::string& text) {
    auto w = words(text);
    if (w.size() != 4) fail(file, r.line, "expected four integers in '" + text + "'");
    AlphaCoeffs a{};
    for (int i = 0; i < 4; ++i) {
        try {
            std::size_t used = 0;
            a[i] = std::stoi(w[i], &used);
            if (used != w[i].size()) throw std::invalid_argument(w[i]);
        } catch (const std::logic_error&) {
            fail(file, r.line, "not an integer: '" + w[i] + "'");
        }
    }
    return a;
}

template <class F>
auto guarded(const std::string& file, int line, F&& f) {
    try {
        return f();
    } catch (const GoldenDataError& e) {
        fail(file, line, e.what());
    }
}

void parse_signatures(const std::string& text, GoldenData& g) {
    const std::string file = "signatures.txt";
    for (const auto& r : rows_of(file, text)) {
        expect_fields(file, r, 5);
        FormulaRow row;
        auto names = split(r.fields[0], '=');
        row.name = names[0];
        row.aliases.assign(names.begin() + 1, names.end());
        for (int i = 0; i < 4; ++i)
            row.fields[i] = {guarded(file, r.line, [&] { return parse_m_expr(r.fields[i + 1]); }), r.fields[i + 1]};
        row.line = r.line;
        auto& t = g.signatures[r.section];
        t.kind = r.section;
        t.rows.push_back(std::move(row));
    }
}

void parse_compact(const std::string& text, GoldenData& g) {
    const std::string file = "compact.txt";
    for (const auto& r : rows_of(file, text)) {
        expect_fields(file, r, 5);
        FormulaRow row;
        row.name = r.fields[0];
        for (int i = 0; i < 4; ++i)
            row.fields[i] = {guarded(file, r.line, [&] { return parse_m_expr(r.fields[i + 1]); }), r.fields[i + 1]};
        row.line = r.line;
        auto& t = g.compact[r.section];
        t.kind = r.section;
        t.rows.push_back(std::move(row));
    }
}

void parse_roots(const std::string& text, GoldenData& g) {
    const std::string file = "roots.txt";
    for (const auto& r : rows_of(file, text)) {
        if (r.section == "LONG" || r.section == "SHORT") {
            expect_fields(file, r, 1);
            (r.section == "LONG" ? g.roots.long_roots : g.roots.short_roots).push_back(ints4(file, r, r.fields[0]));
        } else if (r.section == "COMPACT" || r.section == "NONCOMPACT") {
            expect_fields(file, r, 2);
            guarded(file, r.line, [&] { return parse_root_token(r.fields[1]); });
            (r.section == "COMPACT" ? g.roots.compact : g.roots.noncompact)
                .push_back({ints4(file, r, r.fields[0]), r.fields[1]});
        } else if (r.section == "HC") {
            expect_fields(file, r, 3);
            HCClosedForm hc;
            hc.root = ints4(file, r, r.fields[0]);
            hc.shorthand = r.fields[1];
            hc.form = guarded(file, r.line, [&] { return parse_m_expr(r.fields[1]); });
            const auto printed = ints4(file, r, r.fields[2]);
            LinearForm expansion;
            for (int i = 0; i < 4; ++i) expansion += LinearForm::generator(i + 1) * Rational(printed[i]);
            if (expansion != hc.form)
                fail(file, r.line, "shorthand '" + hc.shorthand + "' expands to " + hc.form.str() +
                                       ", printed expansion is " + expansion.str());
            g.roots.hc.push_back(std::move(hc));
        } else if (r.section == "RHO") {
            expect_fields(file, r, 1);
            g.roots.rho = ints4(file, r, r.fields[0]);
        } else {
            fail(file, r.line, "unknown section [" + r.section + "]");
        }
    }
}

void parse_diagrams(const std::string& text, GoldenData& g) {
    const std::string file = "diagrams.txt";
    for (const auto& r : rows_of(file, text)) {
        expect_fields(file, r, 5);
        DiagramArrow a;
        a.from = r.fields[0];
        a.to = r.fields[1];
        a.degree = {guarded(file, r.line, [&] { return parse_m_expr(r.fields[2]); }), r.fields[2]};
        a.root_token = r.fields[3];
        a.token_root = guarded(file, r.line, [&] { return parse_root_token(r.fields[3]); });
        a.resolved_root = ints4(file, r, r.fields[4]);
        a.line = r.line;
        g.diagrams[r.section].push_back(std::move(a));
    }
}

void parse_structure(const std::string& text, GoldenData& g) {
    const std::string file = "structure.txt";
    for (const auto& r : rows_of(file, text)) {
        auto& s = g.structure;
        if (r.section == "COUNTS") {
            expect_fields(file, r, 3);
            KindCounts c;
            try {
                if (r.fields[1] != "-") c.nodes = std::stoi(r.fields[1]);
                c.m_finite = std::stoi(r.fields[2]);
            } catch (const std::logic_error&) {
                fail(file, r.line, "bad count");
            }
            s.counts[r.fields[0]] = c;
        } else if (r.section == "DEGENERATE" || r.section == "FINITE" || r.section == "DISCRETE") {
            expect_fields(file, r, 2);
            auto& m = r.section == "DEGENERATE" ? s.degenerate : r.section == "FINITE" ? s.finite : s.discrete;
            m[r.fields[0]] = words(r.fields[1]);
        } else if (r.section == "WEIGHT") {
            expect_fields(file, r, 3);
            const auto c = words(r.fields[1]);
            if (c.size() != 4) fail(file, r.line, "expected four coefficients");
            try {
                LinearForm::Coeffs k;
                for (int i = 0; i < 4; ++i) k[i] = Rational::parse(c[i]);
                s.weight[std::stoi(r.fields[0])] = LinearForm(k, Rational::parse(r.fields[2]));
            } catch (const std::invalid_argument&) {
                fail(file, r.line, "bad weight row");
            }
        } else if (r.section == "WEYL") {
            expect_fields(file, r, 2);
            try {
                s.weyl_orders[r.fields[0]] = std::stoul(r.fields[1]);
            } catch (const std::logic_error&) {
                fail(file, r.line, "bad group order");
            }
        } else {
            fail(file, r.line, "unknown section [" + r.section + "]");
        }
    }
}

const std::string& require(const std::map<std::string, std::string>& files, const std::string& name) {
    auto it = files.find(name);
    if (it == files.end()) throw GoldenDataError("missing golden file " + name);
    return it->second;
}

} // namespace

bool FormulaRow::answers_to(const std::string& n) const {
    return name == n || std::find(aliases.begin(), aliases.end(), n) != aliases.end();
}

const FormulaRow* FormulaTable::find(const std::string& name) const {
    for (const auto& r : rows)
        if (r.answers_to(name)) return &r;
    return nullptr;
}

const FormulaTable* GoldenData::signature_table(const std::string& kind) const {
    auto it = signatures.find(kind);
    return it == signatures.end() ? nullptr : &it->second;
}

const FormulaTable* GoldenData::compact_table(const std::string& kind) const {
    auto it = compact.find(kind);
    return it == compact.end() ? nullptr : &it->second;
}

LinearForm parse_m_expr(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw GoldenDataError("empty expression");
    LinearForm total;
    std::size_t p = 0;
    bool first = true;
    while (p < s.size()) {
        Rational sign = 1;
        if (s[p] == '+' || s[p] == '-') {
            if (s[p] == '-') sign = -1;
            ++p;
        } else if (!first) {
            throw GoldenDataError("unexpected '" + std::string(1, s[p]) + "' in '" + s + "'");
        }
        first = false;
        Rational coef = 1;
        std::size_t q = scan_digits(s, p);
        if (q == p) throw GoldenDataError("expected a term in '" + s + "'");
        if (q < s.size() && (s[q] == '*' || s[q] == '/')) {
            std::int64_t num = std::stoll(s.substr(p, q - p)), den = 1;
            p = q;
            if (s[p] == '/') {
                q = scan_digits(s, ++p);
                if (q == p) throw GoldenDataError("bad coefficient in '" + s + "'");
                den = std::stoll(s.substr(p, q - p));
                if (den == 0) throw GoldenDataError("zero denominator in '" + s + "'");
                p = q;
            }
            if (p >= s.size() || s[p] != '*') throw GoldenDataError("expected '*' after coefficient in '" + s + "'");
            ++p;
            coef = Rational(num, den);
        }
        LinearForm group;
        for (;;) {
            q = scan_digits(s, p);
            if (q == p) throw GoldenDataError("expected an atom in '" + s + "'");
            group += atom_form(s.substr(p, q - p));
            p = q;
            if (p < s.size() && s[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        total += group * (coef * sign);
        if (p < s.size() && s[p] != '+' && s[p] != '-')
            throw GoldenDataError("unexpected '" + std::string(1, s[p]) + "' in '" + s + "'");
    }
    return total;
}

AlphaCoeffs parse_root_token(std::string_view text) {
    AlphaCoeffs a{};
    const auto atoms = split(text, ',');
    for (const auto& atom : atoms) {
        const bool ok = (atom.size() == 1 || atom.size() == 2) &&
                        std::all_of(atom.begin(), atom.end(), [](char c) { return c >= '1' && c <= '4'; });
        const int i = ok ? atom[0] - '0' : 0;
        const int j = ok ? atom.back() - '0' : 0;
        if (!ok || j < i) throw GoldenDataError("unknown root shorthand atom '" + atom + "'");
        for (int k = i; k <= j; ++k) ++a[k - 1];
    }
    return a;
}

std::vector<AllowlistEntry> parse_allowlist(std::string_view text) {
    const std::string file = "allowlist.txt";
    std::vector<AllowlistEntry> out;
    for (const auto& r : rows_of(file, text, 3, false)) {
        if (r.fields.size() < 2 || r.fields[0].empty() || r.fields[1].empty())
            fail(file, r.line, "expected 'id | item | justification'");
        out.push_back({r.fields[0], r.fields[1], r.fields.size() > 2 ? r.fields[2] : std::string{}});
    }
    return out;
}

GoldenData parse(const std::map<std::string, std::string>& files) {
    GoldenData g;
    parse_signatures(require(files, "signatures.txt"), g);
    parse_compact(require(files, "compact.txt"), g);
    parse_roots(require(files, "roots.txt"), g);
    parse_diagrams(require(files, "diagrams.txt"), g);
    parse_structure(require(files, "structure.txt"), g);
    g.allowlist = parse_allowlist(require(files, "allowlist.txt"));
    return g;
}

GoldenData load_directory(const std::filesystem::path& dir) {
    std::map<std::string, std::string> files;
    for (const char* name :
         {"signatures.txt", "compact.txt", "roots.txt", "diagrams.txt", "structure.txt", "allowlist.txt"}) {
        std::ifstream in(dir / name, std::ios::binary);
        if (!in) throw GoldenDataError("cannot read " + (dir / name).string());
        std::ostringstream buf;
        buf << in.rdbuf();
        files[name] = buf.str();
    }
    return parse(files);
}

const std::map<std::string, std::string>& embedded_files() {
    static const std::map<std::string, std::string> files{
#include "golden_embedded.inc"
    };
    return files;
}

const GoldenData& embedded() {
    static const GoldenData g = parse(embedded_files());
    return g;
}

const std::vector<DiagramArrow>& expected_edges(const GoldenData& data, const std::string& kind) {
    auto it = data.diagrams.find(kind);
    if (it == data.diagrams.end()) throw std::invalid_argument("no printed diagram for kind '" + kind + "'");
    return it->second;
}

} // namespace f4gvm::paperdata
