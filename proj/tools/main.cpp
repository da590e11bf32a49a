#include "apollo/cli.hpp"

int main(int argc, char** argv) { return apollo::cli::run(argc, argv); }
