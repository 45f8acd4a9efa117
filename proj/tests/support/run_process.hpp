#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct ProcResult {
  int exit_code = -1;
  std::string out;
};

// Runs cmd through /bin/sh, capturing stdout. Redirect stderr in cmd itself
// when it matters.
inline ProcResult run_process(const std::string& cmd) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  ProcResult result;
  char buf[4096];
  std::size_t n;
  while ((n = ::fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testsupport
