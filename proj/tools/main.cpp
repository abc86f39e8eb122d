#include "cli.hpp"

int main(int argc, char** argv) { return bertrand::cli::run(argc, argv); }
