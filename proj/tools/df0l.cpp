#include <iostream>

#include "df0l/cli.hpp"

int main(int argc, char** argv) { return df0l::cli::run(argc, argv, std::cout, std::cerr); }
