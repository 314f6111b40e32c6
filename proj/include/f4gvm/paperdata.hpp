#pragma once

#include "f4gvm/linear_form.hpp"
#include "f4gvm/rootsys.hpp"
#include "f4gvm/verma.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f4gvm::paperdata {

// Transcribed tables. The grammar of every file is documented in the
// header comment of the file itself (data/golden/*.txt).

struct Field {
    LinearForm form;
    std::string source;  // the token text as transcribed
};

struct FormulaRow {
    std::string name;                  // primary name, e.g. "c-" or (compact) "c"
    std::vector<std::string> aliases;  // identified names, e.g. {"d-"}
    std::array<Field, 4> fields;
    int line = 0;

    bool answers_to(const std::string& n) const;
};

struct FormulaTable {
    std::string kind;
    std::vector<FormulaRow> rows;

    const FormulaRow* find(const std::string& name) const;
};

struct LabeledRoot {
    AlphaCoeffs root{};
    std::string label;
};

struct HCClosedForm {
    AlphaCoeffs root{};
    std::string shorthand;
    LinearForm form;
};

struct RootListing {
    std::vector<AlphaCoeffs> long_roots;
    std::vector<AlphaCoeffs> short_roots;
    std::vector<LabeledRoot> compact;
    std::vector<LabeledRoot> noncompact;
    std::vector<HCClosedForm> hc;
    AlphaCoeffs rho{};
};

struct DiagramArrow {
    std::string from;
    std::string to;
    Field degree;
    std::string root_token;
    AlphaCoeffs token_root{};     // shorthand expansion
    AlphaCoeffs resolved_root{};  // root satisfying the reflection identity
    int line = 0;
};

struct KindCounts {
    std::optional<int> nodes;
    int m_finite = 0;
};

struct StructureFacts {
    std::map<std::string, KindCounts> counts;
    std::map<std::string, std::vector<std::string>> degenerate;
    std::map<std::string, std::vector<std::string>> finite;
    std::map<std::string, std::vector<std::string>> discrete;
    std::map<std::string, std::size_t> weyl_orders;  // F4, B4, B3
    std::map<int, LinearForm> weight;                 // printed lambda_i(m)
};

struct AllowlistEntry {
    std::string id;
    std::string item;  // report item id it covers
    std::string justification;
};

struct GoldenData {
    RootListing roots;
    std::map<std::string, FormulaTable> signatures;  // by kind
    std::map<std::string, FormulaTable> compact;     // by kind
    std::map<std::string, std::vector<DiagramArrow>> diagrams;  // JK, M1..M4
    StructureFacts structure;
    std::vector<AllowlistEntry> allowlist;

    const FormulaTable* signature_table(const std::string& kind) const;
    const FormulaTable* compact_table(const std::string& kind) const;
};

/// m-shorthand expression: "14,23,2", "-2*2-4", "1/2*14,13 + 3". Atoms
/// outside {0,1,2,3,4,12,13,14,23,24,34} raise GoldenDataError.
LinearForm parse_m_expr(std::string_view text);

/// Root shorthand: comma-separated atoms "i" or "ij" (i <= j) meaning
/// a_i + ... + a_j.
AlphaCoeffs parse_root_token(std::string_view text);

/// Parses the golden files given as {file name -> contents}; expects
/// signatures.txt, compact.txt, roots.txt, diagrams.txt, structure.txt,
/// allowlist.txt.
GoldenData parse(const std::map<std::string, std::string>& files);
GoldenData load_directory(const std::filesystem::path& dir);
std::vector<AllowlistEntry> parse_allowlist(std::string_view text);

/// The golden data compiled into the library.
const GoldenData& embedded();
/// Raw text of an embedded golden file, by file name.
const std::map<std::string, std::string>& embedded_files();

/// Substitutes label values (rational or symbolic) into a transcribed form.
template <class S>
S substitute(const LinearForm& f, const LabelVector<S>& m) {
    S v = S(f.constant());
    for (int i = 0; i < 4; ++i)
        if (!f.coeffs()[i].is_zero()) v += m[i] * f.coeffs()[i];
    return v;
}

template <class S>
struct NamedSignature {
    std::string name;
    std::vector<std::string> aliases;
    LabelVector<S> signature;
};

/// Printed signatures of `kind` evaluated at m. Throws std::invalid_argument
/// for kinds without a table.
template <class S>
std::vector<NamedSignature<S>> expected_signatures(const GoldenData& data, const std::string& kind,
                                                   const LabelVector<S>& m) {
    const auto* table = data.signature_table(kind);
    if (!table) throw std::invalid_argument("no signature table for kind '" + kind + "'");
    std::vector<NamedSignature<S>> out;
    for (const auto& row : table->rows) {
        NamedSignature<S> ns{row.name, row.aliases, {}};
        for (int i = 0; i < 4; ++i) ns.signature[i] = substitute(row.fields[i].form, m);
        out.push_back(std::move(ns));
    }
    return out;
}

/// Printed arrows for JK, M1, M2, M3 or M4.
const std::vector<DiagramArrow>& expected_edges(const GoldenData& data, const std::string& kind);

} // namespace f4gvm::paperdata
