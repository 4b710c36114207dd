#ifndef BRIDGEGIRTH_CLI_HPP
#define BRIDGEGIRTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bridgegirth {

// Exit codes: 0 = ok, 1 = property violated (witness printed), 2 = input
// error. Streams are injected so the whole surface is unit-testable.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace bridgegirth

#endif
