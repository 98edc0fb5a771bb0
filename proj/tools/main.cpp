#include "foldhom/cli.hpp"

int main(int argc, char** argv) { return foldhom::run_command(argc, argv); }
