#include "holonomy/cli.hpp"

int main(int argc, char** argv) { return holonomy::cli_main(argc, argv); }
