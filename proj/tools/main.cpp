#include "turing_cli.hpp"

int main(int argc, char** argv) { return turing::cli::main_entry(argc, argv); }
