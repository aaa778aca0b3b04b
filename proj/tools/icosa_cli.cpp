#include "icosa/cliapp.hpp"

int main(int argc, char** argv) { return icosa::run_cli(argc, argv); }
