#include "umbra/cli.hpp"

int main(int argc, char** argv) { return umbra::cli::run_main(argc, argv); }
