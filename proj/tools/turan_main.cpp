#include "turan/cli.hpp"

int main(int argc, char** argv) { return turan::cli::run_cli(argc, argv); }
