#pragma once

#include "f4gvm/multiplet.hpp"
#include "f4gvm/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace f4gvm::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kInvalidLabels = 3,
};

struct RunOptions {
    bool color = false;  // ANSI colour in text mode
};

/// Runs one command line (without the program name). Everything goes to
/// out/err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts = {});

/// Colour is used only on a terminal and only when NO_COLOR is unset.
bool color_from_environment(int fd);

// Renderers, also used by tests.
std::string roots_json();
std::string roots_text();
template <class S>
std::string hc_json(const LabelVector<S>& labels);
template <class S>
std::string hc_text(const LabelVector<S>& labels);
template <class S>
std::string multiplet_json(const Multiplet<S>& m, bool reduced);
template <class S>
std::string multiplet_text(const Multiplet<S>& m, bool reduced, bool color);
template <class S>
std::string multiplet_dot(const Multiplet<S>& m, bool reduced);
std::string report_json(const paperdata::VerificationReport& r);
std::string report_text(const paperdata::VerificationReport& r, bool color);

} // namespace f4gvm::cli
