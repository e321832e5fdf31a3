#include <iostream>

#include "sigmaforge/app.hpp"

int main(int argc, char** argv) {
  return sigmaforge::sigmaforge_main(argc, argv, std::cout, std::cerr);
}
