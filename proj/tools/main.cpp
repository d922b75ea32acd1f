#include "fockspec/cli.hpp"

int main(int argc, char** argv) { return fockspec::run_cli(argc, argv); }
