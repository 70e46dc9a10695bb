#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  surjtop::cli::Environment env;
  env.stdout_is_terminal = isatty(fileno(stdout)) != 0;
  if (char const* v = std::getenv("SURJTOP_FORMAT")) {
    env.format_variable = v;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return surjtop::cli::run(args, std::cout, std::cerr, env);
}
