#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace consta::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInequivalent = 1;    // equiv: code counts differ
constexpr int kPrecondition = 2;
constexpr int kNoCriterion = 3;     // equiv: nothing fires, counts agree
constexpr int kContainment = 4;
constexpr int kIo = 5;
constexpr int kBudget = 6;
constexpr int kFieldMismatch = 7;
constexpr int kParse = 8;           // also bad command lines
constexpr int kInternal = 9;

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace consta::cli
