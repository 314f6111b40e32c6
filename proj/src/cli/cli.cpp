#include "f4gvm/cli.hpp"

#include "f4gvm/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace f4gvm::cli {

namespace {

ConcreteLabels parse_labels(const std::vector<std::string>& text) {
    ConcreteLabels m{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::int64_t v = 0;
        std::size_t used = 0;
        try {
            v = std::stoll(text[i], &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != text[i].size())
            throw InvalidLabels("label m" + std::to_string(i + 1) + " = '" + text[i] + "' is not an integer");
        m[i] = v;
    }
    return m;
}

std::vector<paperdata::AllowlistEntry> read_allowlist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("--allowlist", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return paperdata::parse_allowlist(buf.str());
}

} // namespace

bool color_from_environment(int fd) {
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color && *no_color) return false;
    return ::isatty(fd) != 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts) {
    CLI::App app{"Exact generalized Verma module multiplets of F4(-20)", "f4gvm"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "text";
    auto* roots = app.add_subcommand("roots", "List the 48 roots of F4");
    roots->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> hc_labels;
    auto* hc = app.add_subcommand("hc", "Harish-Chandra parameters; symbolic when no labels are given");
    hc->add_option("labels", hc_labels, "Dynkin labels m1 m2 m3 m4")->expected(4);
    hc->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> labels;
    bool symbolic = false, reduce = false;
    auto* mult = app.add_subcommand("multiplet", "Classify the multiplet of the given labels");
    mult->add_option("labels", labels, "Dynkin labels m1 m2 m3 m4 (zeros select a reduced multiplet)")
        ->expected(4)
        ->required();
    mult->add_flag("--symbolic", symbolic, "Work over symbolic labels with the same zero pattern");
    mult->add_flag("--reduce-transitive", reduce, "Drop embeddings implied by longer paths");
    mult->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

    std::vector<std::string> vlabels;
    std::string report = "text", allowlist_path;
    bool vsymbolic = false;
    auto* ver = app.add_subcommand("verify", "Compare derived results with the transcribed tables");
    auto* vs = ver->add_flag("--symbolic", vsymbolic, "Verify over symbolic labels");
    auto* vl = ver->add_option("--labels", vlabels, "Verify at concrete labels a b c d")->expected(4);
    vs->excludes(vl);
    ver->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
    ver->add_option("--allowlist", allowlist_path, "Allowlist file replacing the built-in one");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kUsage;
    }

    if (*ver && !vsymbolic && vlabels.empty()) {
        err << "error: verify needs --symbolic or --labels a b c d\n" << ver->help();
        return kUsage;
    }

    try {
        if (*roots) {
            out << (format == "json" ? roots_json() : roots_text());
        } else if (*hc) {
            if (hc_labels.empty()) {
                const auto m = symbolic_labels(ZeroPattern{});
                out << (format == "json" ? hc_json(m) : hc_text(m));
            } else {
                const auto m = concrete_labels(parse_labels(hc_labels));
                out << (format == "json" ? hc_json(m) : hc_text(m));
            }
        } else if (*mult) {
            const auto m = concrete_labels(parse_labels(labels));
            auto emit = [&](const auto& mp) {
                if (format == "json")
                    out << multiplet_json(mp, reduce);
                else if (format == "dot")
                    out << multiplet_dot(mp, reduce);
                else
                    out << multiplet_text(mp, reduce, opts.color);
            };
            if (symbolic)
                emit(classify_symbolic(zero_pattern_of(m)));
            else
                emit(classify(m));
        } else if (*ver) {
            paperdata::VerifyOptions vo;
            std::vector<paperdata::AllowlistEntry> allow;
            if (!allowlist_path.empty()) {
                allow = read_allowlist(allowlist_path);
                vo.allowlist = &allow;
            }
            const auto r = vsymbolic ? paperdata::verify_symbolic(vo)
                                     : paperdata::verify_concrete(parse_labels(vlabels), vo);
            out << (report == "json" ? report_json(r) : report_text(r, opts.color));
            return r.passed() ? kOk : kVerifyFailed;
        }
    } catch (const InvalidLabels& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidLabels;
    } catch (const OverflowError& e) {
        // Exact arithmetic is 64-bit; labels this large are out of range.
        err << "error: labels too large for exact arithmetic (" << e.what() << ")\n";
        return kInvalidLabels;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GoldenDataError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

} // namespace f4gvm::cli
