#include "boxcount/cli.hpp"

int main(int argc, char** argv) { return boxcount::run_cli(argc, argv); }
