#include "bsswb/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsswb/codec.hpp"
#include "bsswb/error.hpp"
#include "bsswb/expr.hpp"
#include "bsswb/transcend.hpp"
#include "bsswb/vm.hpp"

namespace bsswb {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusCase> parse_expect(std::string_view text) {
  std::vector<CorpusCase> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto parts = split_top_level(t, '|');
    if (parts.size() != 3) throw Error(Errc::SyntaxError, "expected `[inputs] | budget | outcome`", lineno);
    CorpusCase c;
    c.input = parse_field_elem_list(trim(parts[0]));
    std::string budget = trim(parts[1]);
    if (budget.empty() || !std::all_of(budget.begin(), budget.end(), ::isdigit))
      throw Error(Errc::SyntaxError, "bad budget `" + budget + "`", lineno);
    c.budget = std::stoull(budget);
    c.expected = trim(parts[2]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".bss") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry e;
    e.name = f.stem().string();
    e.program = parse_program(read_file(f));
    auto expect = f;
    expect.replace_extension(".expect");
    if (std::filesystem::exists(expect)) e.cases = parse_expect(read_file(expect));
    out.push_back(std::move(e));
  }
  return out;
}

std::string expected_outcome(const Program& p, const CorpusCase& c) {
  if (c.expected == "output=SELF")
    return "output=" + to_string(encode_machine(p, DummyPolicy::Allow).payload);
  return c.expected;
}

std::string actual_outcome(const Program& p, const CorpusCase& c) {
  Oracle iz = iz_oracle({});
  return to_string(run(p, c.input, c.budget, SymbolicInfinite{}, p.oracle ? &iz : nullptr));
}

}  // namespace bsswb
