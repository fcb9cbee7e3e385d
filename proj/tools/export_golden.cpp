// Writes the golden catalog document to the given path (stdout without one).
#include <fstream>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::string text = bihom::cli::catalog_golden_json();
  if (argc < 2) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(argv[1], std::ios::binary);
  out << text;
  return out ? 0 : 2;
}
