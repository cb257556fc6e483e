#include "bsswb/upoly.hpp"

#include <algorithm>

namespace bsswb {

namespace upoly {

void strip(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat eval(const UPoly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  strip(d);
  return d;
}

UPoly rem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  strip(r);
  while (r.size() >= b.size() && !r.empty()) {
    Rat f = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    r.pop_back();
    strip(r);
  }
  return r;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    UPoly r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const UPoly& p, const Rat& a, const Rat& b) {
  UPoly q = p;
  strip(q);
  if (q.size() <= 1 || !(a < b)) return 0;
  auto seq = sturm_sequence(q);
  // Sturm counts distinct roots in (a, b]; drop b itself if it is a root.
  int n = sign_changes(seq, a) - sign_changes(seq, b);
  if (eval(q, b) == 0) --n;
  return static_cast<std::size_t>(std::max(n, 0));
}

}  // namespace upoly

}  // namespace bsswb
