#include "gpssvs/cli.hpp"

int main(int argc, char** argv) { return gpssvs::cli::run(argc, argv); }
