#include <cstdio>
#include <string>
#include <vector>

#include "morseposet/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  morseposet::RunResult result = morseposet::run(args);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
