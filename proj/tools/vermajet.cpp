#include <iostream>

#include "vermajet/report.hpp"

int main(int argc, char** argv) { return vermajet::run(argc, argv, std::cout, std::cerr); }
