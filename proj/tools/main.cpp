#include "tilekit/cli.hpp"

int main(int argc, char** argv) { return tilekit::dispatch(argc, argv); }
