#ifndef GSFORGE_CLI_HPP
#define GSFORGE_CLI_HPP

namespace gsforge {

/// Command dispatch for the gsforge tool. Exit codes: 0 success, 1 usage
/// error, 2 parse error, 3 resource limit, 4 expectation mismatch in the
/// examples command.
int cli_main(int argc, char** argv);

} // namespace gsforge

#endif
