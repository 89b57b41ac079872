#ifndef HOOKVERT_TESTS_SUBPROCESS_HPP
#define HOOKVERT_TESTS_SUBPROCESS_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace hookvert::testing {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Run a shell command, capturing stdout (stderr folded in).
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace hookvert::testing

#endif
