// Command-line dispatcher. Machine-readable JSON with a `verdict` field goes
// to standard output, a one-line human summary to standard error.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 resource-capped or
// UNKNOWN, 64 usage error.

#ifndef TILEKIT_CLI_HPP
#define TILEKIT_CLI_HPP

namespace tilekit {

int dispatch(int argc, const char* const* argv);

}  // namespace tilekit

#endif  // TILEKIT_CLI_HPP
