#ifndef HOLONOMY_CLI_HPP
#define HOLONOMY_CLI_HPP

namespace holonomy {

// Entry point for the holonomy-cert command line tool.
// Exit codes: 0 verified success, 1 failed verification, 2 bad input.
int cli_main(int argc, char** argv);

}  // namespace holonomy

#endif
