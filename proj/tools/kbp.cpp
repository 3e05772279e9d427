#include "kbp/cli.hpp"

int main(int argc, char** argv) { return kbp::cli::main_entry(argc, argv); }
