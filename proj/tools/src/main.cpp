#include <exception>
#include <iostream>

#include "quiddity_cli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return quid::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return quid::cli::kUnsupported;
  }
}
