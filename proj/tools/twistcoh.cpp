#include <iostream>

#include "twistcoh/report/cli.hpp"

int main(int argc, char** argv) { return twistcoh::cli_main(argc, argv, std::cout, std::cerr); }
