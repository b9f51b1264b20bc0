#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bvs/apps.hpp"

namespace bvs::cli {

enum class Command { solve, mult, count, ineq, topology, bench };
enum class Format { text, structured };

struct JobSpec {
  Command command = Command::solve;
  Solver solver = Solver::grur;
  std::string input_path;
  Format format = Format::text;
  Rational refine_width = pow2(-16);
  bool filter = true;
  bool verbose = false;
  bool mult = false;
};

enum ExitCode { ok = 0, usage_error = 1, precondition = 2, internal = 3 };

// one line of an input file after comments are stripped
struct InputLine {
  std::size_t number;
  std::string text;
};
std::vector<InputLine> read_input(const std::string& path);

int run(const JobSpec& spec, std::ostream& out, std::ostream& err);
// argv handling, then run
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bvs::cli
