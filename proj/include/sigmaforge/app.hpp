#ifndef SIGMAFORGE_APP_HPP
#define SIGMAFORGE_APP_HPP

#include <iosfwd>

namespace sigmaforge {

// Whole CLI as a library function, so tests can drive it in process.
// Exit codes: 0 all verdicts true, 1 some verdict legitimately false,
// 2 input/config error, 3 scale error, 4 internal inconsistency
// (structural verdict disagreeing with its brute-force oracle).
int sigmaforge_main(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err);

}  // namespace sigmaforge

#endif
