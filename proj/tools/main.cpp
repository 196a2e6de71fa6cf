#include "cli.hpp"

int main(int argc, char** argv) { return gtwist::cli::run(argc, argv); }
