#include "gammacheb/cli.hpp"

int main(int argc, char** argv) { return gammacheb::cli::run(argc, argv); }
