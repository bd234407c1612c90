#include "edlayout/cli.hpp"

int main(int argc, char** argv) { return edl::run_cli(argc, argv); }
