#include "gsforge/cli.hpp"

int main(int argc, char** argv) {
    return gsforge::cli_main(argc, argv);
}
