#include "gctqft/cli.hpp"

int main(int argc, char** argv) { return gctqft::cli::main_entry(argc, argv); }
