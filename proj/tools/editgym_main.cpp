#include "editgym/commands.hpp"

int main(int argc, char** argv) { return editgym::cli::run(argc, argv); }
