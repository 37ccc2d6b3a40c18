#include "ekzero/cli.hpp"

int main(int argc, char** argv) { return ekzero::cli_main(argc, argv); }
