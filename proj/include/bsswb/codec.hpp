#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsswb/program.hpp"

namespace bsswb {

/// z = 2^m (2 floor|x| + 1) + frac|x| with m = 2n + s + 1, s = [x < 0].
/// Always z >= 2; injective on N x Q.
Rat pair(const BigInt& n, const Rat& x);

/// Inverse of pair. Throws Error(NotACode) when z < 2 or floor(z) is odd.
std::pair<BigInt, Rat> unpair(const Rat& z);

/// Cantor pairing on N x N and its inverse.
BigInt cantor_pair(const BigInt& a, const BigInt& b);
std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z);

/// Control text bytes read as a base-256 big-endian number; the empty
/// program is 0.
BigInt serialize_control(const Program& p);
BigInt text_to_number(std::string_view text);
std::string number_to_text(const BigInt& v);
/// Throws Error(DeserializeError).
ControlText deserialize_control(const BigInt& v);

struct GodelCode {
  std::vector<FieldElem> payload;
  std::size_t size() const noexcept { return payload.size(); }
  friend bool operator==(const GodelCode&, const GodelCode&) = default;
};

enum class DummyPolicy { Forbid, Allow };

/// payload = (<delta, c1>, c2, ..., cJ). A program without constants gets
/// c1 = 0; with Allow, a non-rational c1 is shifted behind a dummy 0.
/// Throws Error(NonRationalFirstConstant) under Forbid.
GodelCode encode_machine(const Program& p, DummyPolicy policy = DummyPolicy::Forbid);

/// Throws Error(NotACode | DeserializeError).
Program decode_machine(const GodelCode& code);

/// `[a, b, ...]`
std::string to_string(const GodelCode& code);
GodelCode parse_godel_code(std::string_view text);

}  // namespace bsswb
