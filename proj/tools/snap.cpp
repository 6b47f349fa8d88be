#include "snap/cli.hpp"

int main(int argc, char** argv) { return snap::run_cli(argc, argv); }
