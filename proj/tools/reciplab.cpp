#include "reciplab/cli.hpp"

int main(int argc, char** argv) {
  return reciplab::run_cli(argc, argv, std::cout, std::cerr);
}
