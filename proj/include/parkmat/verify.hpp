#ifndef PARKMAT_VERIFY_HPP
#define PARKMAT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parkmat/matroid.hpp"
#include "parkmat/mvpoly.hpp"
#include "parkmat/polymatroid.hpp"
#include "parkmat/representation.hpp"
#include "parkmat/sqfree.hpp"
#include "parkmat/tutte.hpp"

namespace parkmat {

struct GeneratorCheck {
  Mask flat = 0;
  int rho = 0;
  std::size_t term_count = 0;
  std::vector<ExponentVec> violations;  // support exponents found inside P(A)
};

struct GeneratorReport {
  bool pass = false;
  std::vector<GeneratorCheck> checks;
};

/// Expands every power-ideal generator and checks that each support exponent
/// lies outside the parking polymatroid. A violation is a hard failure.
GeneratorReport verify_generators_in_nonparking(const std::vector<Hyperplane>& hyperplanes,
                                                const Polymatroid& p, bool parallel = true);

/// Rank of the matrix with rows indexed by k-subsets T with rank(S\T) = d,
/// columns by exponent vectors of degree k, and entries the coefficient of
/// x^q in prod_{s in T} v_s(x). On a certified representation this equals
/// h_k. Row budget: C(n, k) <= row_budget.
int graded_dim_via_rank(const Representation& v, const TransversalMatroid& m, int k,
                        std::size_t row_budget = 100000, bool parallel = true);

struct StageResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

struct VerifyOptions {
  ReprMode mode = ReprMode::powers;
  std::uint64_t seed = 0;
  int max_n = 24;                   // 2^n sweep budget
  std::size_t row_budget = 100000;  // per-degree row budget
  int max_degree = -1;              // cap graded-dimension degrees; -1 = all
  bool parallel = true;
};

struct VerificationReport {
  int n = 0;
  int input_d = 0;
  int d = 0;
  bool renormalized = false;
  std::string mode;
  std::uint64_t seed = 0;
  HVector h_from_tutte;
  std::vector<long long> counts;       // graded lattice-point counts
  std::vector<long long> lambda_dims;  // graded dimensions via matrix rank
  long long points_total = 0;
  std::size_t n_hyperplanes = 0;
  std::size_t n_cocircuits = 0;
  std::size_t n_generators = 0;
  std::vector<StageResult> stages;
  bool pass = false;
};

/// Full pipeline on one set system: normalize, certify a representation,
/// match hyperplanes against cocircuits, check generator supports, check the
/// phi kernel in both directions, compare the three graded dimension
/// computations, and check purity.
VerificationReport run_verification(const SetSystem& input, const VerifyOptions& opt = {});

std::string vec_str(const std::vector<long long>& v);
std::string exponent_str(const ExponentVec& q);

}  // namespace parkmat

#endif
