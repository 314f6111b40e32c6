#include "f4gvm/errors.hpp"
#include "f4gvm/paperdata.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace f4gvm;
using namespace f4gvm::paperdata;

namespace {

const LinearForm m1 = LinearForm::generator(1), m2 = LinearForm::generator(2), m3 = LinearForm::generator(3),
                 m4 = LinearForm::generator(4);

std::map<std::string, std::string> files_with(const std::string& name, const std::string& text) {
    auto files = embedded_files();
    files[name] = text;
    return files;
}

} // namespace

TEST_SUITE("paperdata") {

TEST_CASE("m-shorthand expansion") {
    CHECK(parse_m_expr("14,23,2") == m1 + m2 * Rational(3) + m3 * Rational(2) + m4);
    CHECK(parse_m_expr("-2*2-4") == -(m2 * Rational(2)) - m4);
    CHECK(parse_m_expr("1/2*14,13 + 3") == (m1 * Rational(2) + m2 * Rational(2) + m3 * Rational(2) + m4) *
                                               Rational(1, 2) + m3);
    CHECK(parse_m_expr("0").is_zero());
    CHECK(parse_m_expr(" - 24 , 2 ") == -(m2 * Rational(2)) - m3 - m4);
}

TEST_CASE("unknown or malformed shorthand fails loudly") {
    for (const char* bad : {"15", "21", "5", "", "2*", "1/0*3", "1,", "m1", "--1", "1/2"})
        CHECK_THROWS_AS(parse_m_expr(bad), GoldenDataError);
}

TEST_CASE("root shorthand") {
    CHECK(parse_root_token("14,24,3") == AlphaCoeffs{1, 2, 3, 2});
    CHECK(parse_root_token("44") == AlphaCoeffs{0, 0, 0, 1});
    CHECK(parse_root_token("14,14,23,3") == AlphaCoeffs{2, 3, 4, 2});
    for (const char* bad : {"41", "5", "123", "", "1,,2", "a"}) CHECK_THROWS_AS(parse_root_token(bad), GoldenDataError);
}

TEST_CASE("embedded data loads and matches the data directory") {
    const auto& g = embedded();
    CHECK(g.signature_table("MAIN")->rows.size() == 24);
    CHECK(g.compact_table("MAIN")->rows.size() == 12);
    CHECK(g.roots.hc.size() == 20);
    CHECK(g.roots.compact.size() == 9);
    CHECK(g.roots.noncompact.size() == 15);
    CHECK(g.allowlist.size() == 10);
    const auto dir = load_directory(F4GVM_GOLDEN_DIR);
    CHECK(dir.allowlist.size() == g.allowlist.size());
    CHECK(dir.signature_table("M3")->rows.size() == g.signature_table("M3")->rows.size());
}

TEST_CASE("aliases are stored once") {
    const auto* r = embedded().signature_table("M1")->find("d-");
    REQUIRE(r);
    CHECK(r->name == "c-");
    CHECK(r->aliases == std::vector<std::string>{"d-"});
}

TEST_CASE("expected_signatures") {
    const auto s = symbolic_labels(ZeroPattern{});
    const auto rows = expected_signatures(embedded(), "MAIN", s);
    CHECK(rows.size() == 24);
    auto h = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.name == "h-"; });
    REQUIRE(h != rows.end());
    CHECK(h->signature == LabelVector<LinearForm>{m2 + m3, m1, m2 * Rational(2) + m3 + m4,
                                                  -(m1 * Rational(2) + m2 * Rational(4) + m3 * Rational(2) + m4)});

    const auto m2rows = expected_signatures(embedded(), "M2", symbolic_labels(ZeroPattern::from_indices({2})));
    CHECK(m2rows.size() == 6);
    auto f = std::find_if(m2rows.begin(), m2rows.end(), [](const auto& r) { return r.name == "f-"; });
    REQUIRE(f != m2rows.end());
    CHECK(f->signature[3] == -(m1 * Rational(2) + m3 * Rational(2) + m4));

    const auto* m24 = embedded().compact_table("M24");
    REQUIRE(m24);
    CHECK(m24->rows.front().fields[3].form == m3 * Rational(1, 2));

    const auto at = expected_signatures(embedded(), "MAIN", LabelVector<Rational>{1, 1, 1, 1});
    CHECK(at.front().signature == LabelVector<Rational>{1, 1, 1, 1});
    CHECK_THROWS_AS(expected_signatures(embedded(), "M12", s), std::invalid_argument);
}

TEST_CASE("expected_edges") {
    const auto& jk = expected_edges(embedded(), "JK");
    REQUIRE(jk.size() == 2);
    CHECK(jk[0].degree.form == m4);
    CHECK(jk[1].degree.form == m3);
    CHECK(jk[0].resolved_root == AlphaCoeffs{1, 2, 3, 2});
    const auto& m4e = expected_edges(embedded(), "M4");
    std::vector<LinearForm> minus;
    for (const auto& a : m4e)
        if (a.from.back() == '-') minus.push_back(a.degree.form);
    CHECK(minus == std::vector<LinearForm>{m1, m2, m3});
    CHECK(expected_edges(embedded(), "M1").size() == 4);
    CHECK_THROWS_AS(expected_edges(embedded(), "M13"), std::invalid_argument);
}

TEST_CASE("loader errors") {
    CHECK_THROWS_AS(parse(files_with("signatures.txt", "[MAIN]\n0- | 1 | 2 | 3 | 15\n")), GoldenDataError);
    CHECK_THROWS_AS(parse(files_with("signatures.txt", "[MAIN]\n0- | 1 | 2 | 3\n")), GoldenDataError);
    CHECK_THROWS_AS(parse(files_with("signatures.txt", "0- | 1 | 2 | 3 | 4\n")), GoldenDataError);
    CHECK_THROWS_AS(parse(files_with("roots.txt", "[HC]\n1 1 0 0 | 12 | 1 2 0 0\n")), GoldenDataError);
    CHECK_THROWS_AS(parse(files_with("roots.txt", "[BOGUS]\n1 1 0 0\n")), GoldenDataError);
    CHECK_THROWS_AS(parse(files_with("diagrams.txt", "[M1]\nc- | e- | 3 | 25 | 0 1 1 1\n")), GoldenDataError);
    auto missing = embedded_files();
    missing.erase("compact.txt");
    CHECK_THROWS_AS(parse(missing), GoldenDataError);
    CHECK_THROWS_AS(load_directory("/nonexistent/golden"), GoldenDataError);
    try {
        parse(files_with("signatures.txt", "# header\n\n[MAIN]\n0- | 1 | 2 | 3 | 4,5\n"));
        FAIL("expected an error");
    } catch (const GoldenDataError& e) {
        CHECK(std::string(e.what()).find("signatures.txt:4") != std::string::npos);
    }
}

TEST_CASE("allowlist parsing") {
    const auto a = parse_allowlist("# c\nx | MAIN/signature/0+ | reason | with bar\n\ny | roots/count |\n");
    REQUIRE(a.size() == 2);
    CHECK(a[0].id == "x");
    CHECK(a[0].justification == "reason | with bar");
    CHECK(a[1].item == "roots/count");
    CHECK_THROWS_AS(parse_allowlist("lonely\n"), GoldenDataError);
}

}
