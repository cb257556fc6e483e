#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsswb/field_elem.hpp"
#include "bsswb/vm.hpp"

namespace bsswb {

/// Elements and the context z whose field Q(z) serves as base.
struct Vec {
  std::vector<FieldElem> elems;
  std::vector<FieldElem> context;
};

enum class Over { Q, Context };
enum class TrdegMethod { Jacobian, RankFormula, BruteForce };

struct TrdegReport {
  unsigned trdeg = 0;
  std::vector<std::size_t> basis;  // indices into elems
  TrdegMethod method = TrdegMethod::Jacobian;
};

struct KoReport {
  unsigned lower = 1, upper = 1;
  std::optional<unsigned> exact;
  std::string certificate;  // empty when exact is absent
};

struct DepWitness {
  MPoly poly;  // variable i stands for elems[i] (printed X1, X2, ...)
  unsigned degree_bound = 0;
  unsigned height_bound = 0;
};

/// Greedy basis, lowest index first, of the rows of the Jacobian
/// d f_i / d T_j over Q(T).
std::vector<std::size_t> jacobian_basis(const std::vector<RatFunc>& fs);

/// Algebraic elements must be algebraic over sub-vectors of context ++ elems;
/// a base entry occurring in neither raises Error(InvalidArgument).
TrdegReport trdeg(const Vec& v, Over over = Over::Q);

/// False as soon as an algebraic element is present.
bool algebraically_independent(const Vec& v, Over over = Over::Q);

/// trdeg over Q(context) as n - max{k | k indices removable, each algebraic
/// over the field generated by the context and the rest}.
/// Throws Error(SubsetSearchTooLarge) for n > 12.
TrdegReport max_independent_subset(const Vec& v);

/// First integer polynomial (graded by total degree, then lexicographic in
/// X1-major monomial order on coefficient tuples valued 0, 1, -1, 2, ...)
/// of degree <= degree_bound and height <= height_bound, leading coefficient
/// positive, vanishing on the elements. Elements must be rational functions
/// and the context empty. `cap` bounds the candidates visited (default
/// BSSWB_CANDIDATE_CAP or 10^7); exceeding it throws
/// Error(SearchSpaceTooLarge).
std::optional<DepWitness> find_dependence(const Vec& v, unsigned degree_bound, unsigned height_bound,
                                          std::optional<std::uint64_t> cap = std::nullopt);

/// max(1, trdeg over Q(context)). Throws Error(EmptyVector).
unsigned kd_complexity(const Vec& v);

KoReport ko_bounds(const Vec& v);

/// kd_complexity(v) <= k, decided by searching for k+1 elements independent
/// over Q(context).
bool kolmogorov_set_member(const Vec& v, unsigned k);

/// Membership oracle for vectors algebraically independent over Q(context).
Oracle iz_oracle(std::vector<FieldElem> context);

/// Is x in Q(gens)? gens must be algebraically independent. Searches
/// x = P(gens)/Q(gens) with deg P, deg Q <= degree_bound; false means "not
/// found within the bound".
bool in_generated_field(const RatFunc& x, const std::vector<RatFunc>& gens, unsigned degree_bound = 3);

std::string to_string(const TrdegReport& r);
std::string to_string(const KoReport& r);
std::string to_string(TrdegMethod m);
/// Polynomial in X1..Xn, X1-major.
std::string witness_string(const MPoly& p);

}  // namespace bsswb
