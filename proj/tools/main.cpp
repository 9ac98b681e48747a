#include "cli.hpp"

int main(int argc, char** argv) { return gsh::cli::main_entry(argc, argv); }
