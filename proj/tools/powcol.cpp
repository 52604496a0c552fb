#include "powcol/cli.hpp"

int main(int argc, char** argv) { return powcol::cli::run(argc, argv); }
