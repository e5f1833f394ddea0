#include "xifn/cli.hpp"

int main(int argc, char** argv) { return xifn::cli::run_cli(argc, argv); }
