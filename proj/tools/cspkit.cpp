// CLI entry point; subcommands are wired up in cli_main.
#include "cspkit/cspkit.hpp"

int main(int argc, char** argv) { return cspkit::cli_main(argc, argv); }
