#pragma once

#include <ostream>
#include <string>
#include <vector>

/// Command-line front end.  Exit codes: 0 success, 1 malformed flags (the
/// message names the offending flag), 2 verification mismatch (the message
/// names the fixture and the differing value).
namespace sunn::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sunn::cli
