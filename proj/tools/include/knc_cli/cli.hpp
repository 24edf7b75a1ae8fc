#pragma once

#include <iosfwd>
#include <string>

#include "knc/serialize.hpp"

namespace knc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kParse = 3,
    kInvalidCurve = 4,
    kUndetermined = 5,
    kConsistency = 6,
    kSelftestFailed = 7,
};

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

// Display precision for approximate values, from KNCENTER_DIGITS (default 6).
unsigned display_digits();

// Human-readable rendering of a report emitted by the JSON path.
std::string render_text(const Json& report, unsigned digits);

// Small-parameter invariant checks across every module.
Json run_selftest();

}  // namespace knc::cli
