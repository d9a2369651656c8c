#pragma once

#include <ostream>

namespace hyp321::cli {

enum ExitCode { Ok = 0, VerificationFailure = 1, UsageError = 2, NoMatch = 3, NumericError = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyp321::cli
