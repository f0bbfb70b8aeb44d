#include "leveler/pipeline.hpp"

int main(int argc, char** argv) { return leveler::run_cli(argc, argv); }
