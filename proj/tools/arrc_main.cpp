#include <arrc/cli.hpp>

#include <mpfr.h>

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    int rc = arrc::cli::run(args, std::cout, std::cerr);
    mpfr_free_cache();
    return rc;
}
