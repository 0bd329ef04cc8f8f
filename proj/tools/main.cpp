#include "fanlike/cli.hpp"

int main(int argc, char** argv) { return fanlike::cli::main_entry(argc, argv); }
