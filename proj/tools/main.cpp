#include "cellci/io.hpp"

int main(int argc, char** argv) { return cellci::run_cli(argc, argv); }
