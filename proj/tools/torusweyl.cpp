#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return torusweyl::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
