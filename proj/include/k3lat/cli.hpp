#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat {

/* Exit codes of the command line front end. */
enum exit_code : int {
    exit_ok = 0,
    exit_math = 1,  // mismatch, no match, predicate false
    exit_input = 2, // bad arguments or unreadable input
};

/* Runs one command; args exclude the program name. */
int cli_dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace k3lat
