#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsswb/program.hpp"

namespace bsswb {

/// One line of a `.expect` file: `[inputs] | budget | expected`. The
/// expected text is compared with to_string(RunOutcome); `output=SELF`
/// stands for the program's own payload.
struct CorpusCase {
  std::vector<FieldElem> input;
  std::uint64_t budget = 0;
  std::string expected;
};

/// Blank lines and `#` comments are skipped. Throws Error(SyntaxError).
std::vector<CorpusCase> parse_expect(std::string_view text);

struct CorpusEntry {
  std::string name;  // file stem
  Program program;
  std::vector<CorpusCase> cases;
};

/// Loads every `*.bss` in `dir` (sorted by name) with its sibling `.expect`.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

/// Expected outcome text with `SELF` resolved.
std::string expected_outcome(const Program& p, const CorpusCase& c);

/// Runs the case directly, with the I_() oracle for oracle machines.
std::string actual_outcome(const Program& p, const CorpusCase& c);

}  // namespace bsswb
