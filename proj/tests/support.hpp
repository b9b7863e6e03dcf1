#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "critline/complex.hpp"

namespace testsupport {

// deterministic uniform doubles (explicit 53-bit mapping, like the library's
// verify suites)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  critline::Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

 private:
  std::mt19937_64 gen_;
};

inline double rel_err(critline::Complex got, critline::Complex want) {
  return critline::abs(got - want) / (critline::abs(want) + 1e-300);
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the critline binary (path from CRITLINE_BIN) with the given args and
// captures stdout.
inline CommandResult run_cli(const std::string& args) {
  const char* bin = std::getenv("CRITLINE_BIN");
  if (!bin) return {-1, "CRITLINE_BIN not set"};
  const std::string cmd = std::string(bin) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace testsupport
