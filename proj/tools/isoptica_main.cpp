#include "isoptica/cli.hpp"

int main(int argc, char** argv) {
    return isoptica::run_cli(argc, argv);
}
