// The `ramsey` command line: build, verify, count, enumerate, lemmas,
// diagram and search subcommands over certificate files.

#ifndef RAMSEY_TOOLS_CLI_H_
#define RAMSEY_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace ramsey::cli

#endif  // RAMSEY_TOOLS_CLI_H_
