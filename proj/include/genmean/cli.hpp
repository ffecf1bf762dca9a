#pragma once

#include <iosfwd>

namespace genmean::cli {

// Exit codes: 0 ok / pass, 1 verification failed or oracle mismatch,
// 2 usage or domain error, 3 inconclusive, budget or overflow.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genmean::cli
