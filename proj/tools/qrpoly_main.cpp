#include "qrpoly/cli.hpp"

int main(int argc, char** argv) { return qrpoly::run(argc, argv); }
