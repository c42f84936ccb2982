#include "walkex/cli.hpp"

int main(int argc, char** argv) { return walkex::cli_main(argc, argv); }
