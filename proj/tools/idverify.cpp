#include "idv/cli.hpp"

int main(int argc, char** argv) { return idv::main_cli(argc, argv); }
