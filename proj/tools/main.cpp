#include "cli.hpp"

int main(int argc, char** argv) { return starfact::cli::main(argc, argv); }
