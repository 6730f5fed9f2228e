#include <iostream>

#include "mhdb/cli/cli.hpp"

int main(int argc, char** argv) { return mhdb::cli_main(argc, argv, std::cout, std::cerr); }
