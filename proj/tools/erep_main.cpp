#include "erep/cli.hpp"

int main(int argc, char** argv) {
    return erep::run(argc, argv);
}
