#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grl::cli {

// Exit statuses shared by every verb.
enum Exit : int { ok = 0, refuted = 1, unknown = 2, input_error = 3 };

// Runs one command line (without the program name); returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grl::cli
