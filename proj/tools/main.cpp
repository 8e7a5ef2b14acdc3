#include "cli.hpp"

int main(int argc, char** argv) { return qsphere::cli::run(argc, argv); }
