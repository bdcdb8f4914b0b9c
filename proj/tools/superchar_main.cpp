#include "cli/commands.hpp"

int main(int argc, char** argv) { return superchar::cli::run(argc, argv); }
