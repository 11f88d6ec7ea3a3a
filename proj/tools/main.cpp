#include "wps/cli.hpp"

int main(int argc, char** argv) { return wps::cli_main(argc, argv); }
