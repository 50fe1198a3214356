#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace relcx::testing {

struct RunResult {
  int status = -1;
  std::string out;
};

/// Runs the CLI with `args` (shell syntax) from the fixtures directory; stderr is discarded.
inline RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string("cd '") + RELCX_FIXTURES + "' && '" + RELCX_BINARY + "' " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace relcx::testing
