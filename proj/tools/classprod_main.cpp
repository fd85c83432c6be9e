#include "classprod/cli.hpp"

int main(int argc, char** argv) { return classprod::run_cli_main(argc, argv); }
