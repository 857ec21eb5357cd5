#include "barriertop/cli.hpp"

int main(int argc, char** argv) { return barriertop::run_cli(argc, argv); }
