#include "spc/cli.hpp"

int main(int argc, char** argv) { return spc::run_cli(argc, argv); }
