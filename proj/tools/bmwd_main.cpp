#include "bmwd/cli.hpp"

int main(int argc, char** argv) { return bmwd::cli::run(argc, argv); }
