#include "zerocyc/cli.hpp"

int main(int argc, char** argv) { return zerocyc::cli::run(argc, argv); }
