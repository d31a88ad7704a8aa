#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsp {

// Exit codes: 0 success / verified, 2 verification negative, 3 input error,
// 4 internal invariant breach.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternalError = 4;

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp
