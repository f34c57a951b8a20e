// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0
//
// Helpers for driving the installed command line binary from tests. The
// binary and data locations arrive via the CUTMIT_CLI and CUTMIT_DATA
// environment variables, set by the test harness.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testutil {

namespace fs = std::filesystem;

inline std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) throw std::runtime_error(std::string("environment variable ") + name + " not set");
  return v;
}

inline std::string cli_path() { return env_or_fail("CUTMIT_CLI"); }
inline fs::path data_path() { return env_or_fail("CUTMIT_DATA"); }

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      fs::path candidate =
          fs::temp_directory_path() / ("cutmit_test_" + std::to_string(rd() % 100000000));
      std::error_code ec;
      if (fs::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create scratch directory");
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the CLI with the given arguments, capturing exit code and streams.
/// Entries in `env` are NAME=VALUE assignments applied to the child only.
inline RunResult run_cli(const std::vector<std::string>& args, const fs::path& scratch,
                         const std::vector<std::string>& env = {}) {
  fs::path out_file = scratch / ".stdout", err_file = scratch / ".stderr";
  std::ostringstream cmd;
  if (!env.empty()) {
    cmd << "env";
    for (const std::string& e : env) cmd << " " << shell_quote(e);
    cmd << " ";
  }
  cmd << shell_quote(cli_path());
  for (const std::string& a : args) cmd << " " << shell_quote(a);
  cmd << " > " << shell_quote(out_file.string()) << " 2> " << shell_quote(err_file.string());
  int raw = std::system(cmd.str().c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

}  // namespace testutil
