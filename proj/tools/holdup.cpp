#include <iostream>
#include <string>
#include <vector>

#include "holdup/app/commands.hpp"

int main(int argc, char** argv) {
  // Worker count comes from HOLDUP_WORKERS inside the sampling engine.
  const std::vector<std::string> args(argv + 1, argv + argc);
  return holdup::app::run_cli(args, std::cout, std::cerr);
}
