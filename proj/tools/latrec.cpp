#include "latrec/cli.hpp"

int main(int argc, char** argv) { return latrec::cli::run(argc, argv); }
