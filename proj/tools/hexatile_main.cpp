#include "hexatile/cli.hpp"

int main(int argc, char** argv) { return hexatile::cli_run(argc, argv); }
