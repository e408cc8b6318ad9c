#include "cauchynet/cli.hpp"

int main(int argc, char** argv) { return cauchynet::cli::run(argc, argv); }
