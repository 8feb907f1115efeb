#include "chebcap/cli.hpp"

int main(int argc, char** argv) { return chebcap::cli_main(argc, argv); }
