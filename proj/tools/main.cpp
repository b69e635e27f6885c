#include "shadow/cli.hpp"

int main(int argc, char** argv) { return shadow::cli::run_main(argc, argv); }
