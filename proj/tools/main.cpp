#include "rsgd/cli.hpp"

int main(int argc, char** argv) { return rsgd::cli_main(argc, argv); }
