#include "hahnfactor/cli.hpp"

int main(int argc, char **argv) { return hahnfactor::cli_main(argc, argv); }
