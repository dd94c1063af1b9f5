// Catalog of rank-2 braiding families and their expected Nichols algebras.
//
// Each family carries a symbolic 4x4 operator template over its parameters,
// a domain, and a quadratic-relation criterion. instantiate() evaluates the
// template at concrete parameter values and resolves the matching row of the
// family's classification: defining relations, a PBW-style exponent ladder
// for degreewise dimensions, the total dimension when finite, and a growth
// tag. verify_profile() then checks all of it against the computed algebra.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/hilbert.hpp"
#include "nichols/report.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

enum class FamilyId {
  R2_1,
  R2_2,
  R2_2a,
  R2_3,
  R1_1,
  R1_2,
  R1_2a,
  R1_2c,
  R1_2ac,
  R1_3,
  R1_4,
  R0_1,
};

const char* family_str(FamilyId id);
std::optional<FamilyId> family_id(const std::string& name);

// Symbolic family description. Entry expressions use the parameter names,
// integer literals and + - * / ^; the 4x4 grid is row-major over the pair
// basis x1x1, x2x1, x1x2, x2x2 in both row and column order.
struct FamilySpec {
  FamilyId id;
  std::string name;
  OperatorKind kind;  // whether the template is an R-matrix or a braiding
  std::vector<std::string> params;
  std::vector<std::string> domain;          // conditions, all must hold
  std::string quad_condition;               // quadratic relations exist iff true
  std::array<std::string, 16> entries;
  std::vector<std::string> rows;            // row guards, for reference output
};

const std::vector<FamilySpec>& families();
const FamilySpec& family(FamilyId id);

// JSON rendering of the full catalog (sorted keys, two-space indent).
std::string catalog_json();

using Params = std::map<std::string, Scalar>;

// Evaluate an entry expression / condition at concrete parameter values.
Scalar eval_expr(const std::string& text, const Field& f, const Params& params);
bool eval_condition(const std::string& text, const Field& f, const Params& params);

// Exponent ladder: monomials g1^e1 * ... * gn^en subject to a disjunction of
// conjunctions of integer-linear constraints sum_i coef[i]*e_i <= bound.
// An empty clause list leaves the exponents unconstrained.
struct PBWGenerator {
  std::string name;
  unsigned degree;
};

struct LadderAtom {
  std::vector<long> coef;  // one entry per generator
  long bound;
};

struct PBWLadder {
  std::vector<PBWGenerator> gens;
  std::vector<std::vector<LadderAtom>> clauses;
  std::string text;  // rendered constraint, for reports
};

// Number of exponent tuples of the given total degree admitted by the ladder.
std::uint64_t pbw_count(const PBWLadder& ladder, unsigned degree);

std::string ladder_text(const PBWLadder& ladder);

// Resolved classification row for one parameter point.
struct ExpectedProfile {
  std::string row;                      // guard of the matched row
  std::vector<TensorElem> relations;    // defining relations of the quotient
  std::optional<PBWLadder> ladder;
  std::optional<std::uint64_t> total_dim;
  std::optional<GrowthTag> growth;
  std::vector<std::string> notes;
};

struct Instantiated {
  const FamilySpec* spec;
  unsigned conductor;
  Params params;
  BraidingSpec braiding;  // canonical form
  ExpectedProfile profile;
};

// Evaluate the template only: validates parameter names, field conductors
// and the domain conditions. Throws std::invalid_argument on violations.
BraidingSpec instantiate_braiding(FamilyId id, unsigned conductor, const Params& params);

// Full instantiation including row resolution. Root-of-unity orders in row
// guards are searched up to order_bound; an order not found within the bound
// is treated as infinite and recorded in the profile notes. Throws
// std::invalid_argument when no row matches the parameter point.
Instantiated instantiate(FamilyId id, unsigned conductor, const Params& params,
                         unsigned order_bound = 1000);

// Run every check for one parameter point: braid equation and QYBE for the
// operator pair, invertibility, rigidity, quadratic-span equality in both
// directions, vanishing of each defining relation, degreewise dimensions
// against the ladder, total dimension with a closed window, and the growth
// tag (degrees >= 6 only).
VerifyReport verify_profile(const Instantiated& inst, unsigned max_degree);
VerifyReport verify_profile(FamilyId id, unsigned conductor, const Params& params,
                            unsigned max_degree, unsigned order_bound = 1000);

// Built-in witness rows covering every family and every classification row
// reachable at small conductors.
struct Witness {
  FamilyId id;
  unsigned conductor;
  std::vector<std::pair<std::string, std::string>> params;  // name -> scalar text
  unsigned max_degree;
  std::string label;
};

const std::vector<Witness>& witness_suite();

// Root-of-unity sweep over the one parameter left out of `fixed`: for every
// primitive n-th root z_n^j with n <= order_bound the sampled point is tested
// for existence of quadratic relations and compared with the family's
// quadratic criterion. Samples violating the domain are skipped.
struct SweepSample {
  unsigned conductor;  // order of the sampled root
  unsigned power;
  std::string value;
  bool in_domain = false;
  bool has_quadratic = false;
  bool predicted = false;
  bool match = true;
};

struct SweepResult {
  FamilyId id;
  std::string varying;
  std::vector<SweepSample> samples;
  bool all_match = true;
};

SweepResult sweep_quadratic(FamilyId id, const std::map<std::string, std::string>& fixed,
                            unsigned order_bound);

}  // namespace nichols
