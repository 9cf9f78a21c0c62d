// Copyright 2026 The jrecast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <string>
#include <vector>

#include "jrecast/support/error.hpp"

namespace jrecast::verify {

struct ProcessResult {
  std::string out;
  std::string err;
  int exit_code = -1;
  bool timed_out = false;
};

class CommandFailure : public Error {
 public:
  explicit CommandFailure(const std::string& msg) : Error(msg) {}
};

/// Runs a shell command with the caller's environment plus `extra_env`,
/// capturing stdout and stderr separately. On timeout the whole process
/// group is killed and timed_out is set.
inline ProcessResult run_command(
    const std::string& command, const std::string& cwd, double timeout_sec,
    const std::string& stdin_bytes = "",
    const std::vector<std::pair<std::string, std::string>>& extra_env = {}) {
  int out_pipe[2], err_pipe[2], in_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0 || pipe(in_pipe) != 0)
    throw CommandFailure("pipe: " + std::string(strerror(errno)));

  pid_t pid = fork();
  if (pid < 0) throw CommandFailure("fork: " + std::string(strerror(errno)));
  if (pid == 0) {
    setpgid(0, 0);
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(in_pipe[0]); close(in_pipe[1]);
    close(out_pipe[0]); close(out_pipe[1]);
    close(err_pipe[0]); close(err_pipe[1]);
    if (!cwd.empty() && chdir(cwd.c_str()) != 0) _exit(127);
    for (const auto& [k, v] : extra_env) setenv(k.c_str(), v.c_str(), 1);
    execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
    _exit(127);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);

  if (!stdin_bytes.empty()) {
    size_t off = 0;
    while (off < stdin_bytes.size()) {
      ssize_t w = write(in_pipe[1], stdin_bytes.data() + off,
                        stdin_bytes.size() - off);
      if (w <= 0) break;
      off += static_cast<size_t>(w);
    }
  }
  close(in_pipe[1]);

  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
  fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

  ProcessResult res;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(static_cast<long>(timeout_sec * 1000));
  bool out_open = true, err_open = true;
  char buf[4096];
  while (out_open || err_open) {
    struct pollfd fds[2];
    int n = 0;
    if (out_open) fds[n++] = {out_pipe[0], POLLIN, 0};
    if (err_open) fds[n++] = {err_pipe[0], POLLIN, 0};
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      res.timed_out = true;
      kill(-pid, SIGKILL);
      break;
    }
    int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
            .count());
    int rv = poll(fds, n, std::min(wait_ms, 200));
    if (rv < 0 && errno != EINTR)
      throw CommandFailure("poll: " + std::string(strerror(errno)));
    auto drain = [&](int fd, std::string& sink, bool& open) {
      while (true) {
        ssize_t r = read(fd, buf, sizeof(buf));
        if (r > 0) {
          sink.append(buf, static_cast<size_t>(r));
        } else if (r == 0) {
          open = false;
          break;
        } else {
          break;  // EAGAIN
        }
      }
    };
    drain(out_pipe[0], res.out, out_open);
    drain(err_pipe[0], res.err, err_open);
  }
  close(out_pipe[0]);
  close(err_pipe[0]);

  int status = 0;
  if (res.timed_out) {
    waitpid(pid, &status, 0);
    res.exit_code = -1;
  } else {
    waitpid(pid, &status, 0);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status)
                                      : 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
  }
  return res;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out.push_back(c);
  }
  out += "'";
  return out;
}

}  // namespace jrecast::verify
