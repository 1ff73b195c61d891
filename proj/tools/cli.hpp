#pragma once

#include <iosfwd>

namespace fpsl::cli {

// Exit status: 0 success, 1 verification failure, 2 configuration or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fpsl::cli
