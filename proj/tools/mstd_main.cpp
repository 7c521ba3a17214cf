#include "mstd/cli.hpp"

int main(int argc, char** argv) { return mstd::run_main(argc, argv); }
