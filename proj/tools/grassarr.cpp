#include "grassarr/cli.hpp"

int main(int argc, char** argv) { return grassarr::cli::run(argc, argv); }
