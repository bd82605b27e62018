#include "cli.hpp"

int main(int argc, char** argv) { return pitchsim::cli::run_cli(argc, argv); }
