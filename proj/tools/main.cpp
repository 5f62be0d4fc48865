#include "ak4/cli.hpp"

int main(int argc, char** argv) {
  return ak4::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
