#include "homothets/cli.hpp"

int main(int argc, char** argv) { return homothets::run_cli(argc, argv); }
