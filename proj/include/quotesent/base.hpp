// Copyright 2026 The quotesent Authors.
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

// Shared plumbing: error type, string helpers and a deterministic
// data-parallel loop.

#ifndef QUOTESENT_BASE_HPP_
#define QUOTESENT_BASE_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace quotesent {

// Raised for anything wrong with user-supplied input: missing files,
// malformed records, inconsistent references. The CLI maps it to exit
// code 2. `line` is 1-based; 0 means the error is not tied to a line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string &message)
      : std::runtime_error(message) {}

  InputError(const std::string &file, std::size_t line,
             const std::string &message)
      : std::runtime_error(Format(file, line, message)),
        file_(file),
        line_(line) {}

  const std::string &file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  static std::string Format(const std::string &file, std::size_t line,
                            const std::string &message) {
    std::string out = file;
    if (line > 0) out += ", line " + std::to_string(line);
    out += ": " + message;
    return out;
  }

  std::string file_;
  std::size_t line_ = 0;
};

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Lowercases ASCII letters only; other bytes (including UTF-8 sequences)
// pass through unchanged.
inline std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsAsciiSpace(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !IsAsciiSpace(s[i])) ++i;
    if (i > start) parts.emplace_back(s.substr(start, i - start));
  }
  return parts;
}

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename Range>
std::string Join(const Range &parts, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto &p : parts) {
    if (!first) out += sep;
    out += p;
    first = false;
  }
  return out;
}

// Lowercased, single-space-separated form of a word or phrase.
inline std::string NormalizePhrase(std::string_view s) {
  return Join(SplitWhitespace(AsciiLower(s)), " ");
}

inline std::ifstream OpenInput(const std::string &path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw InputError(path, 0, "no such file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot open file");
  return in;
}

// Strips a trailing '\r' so CRLF files parse like LF files.
inline void ChompCr(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Runs fn(i) for every i in [0, n) on up to `jobs` threads. Work is split
// into contiguous chunks; callers write results into slot i, so output is
// independent of the thread count. The first exception thrown by any worker
// is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(std::size_t n, std::size_t jobs, Fn &&fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  jobs = std::min(jobs, n);
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t t = 0; t < jobs; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace quotesent

#endif  // QUOTESENT_BASE_HPP_
