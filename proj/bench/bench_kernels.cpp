// Timing comparison of the OpenMP kernels against their serial references:
// rank-table + Tutte sweep, exact elimination rank, and the phi sweep.
// Usage: bench_kernels [n] [d]   (defaults: n=18, d=5 for the Tutte kernel)

#include <omp.h>

#include <cstdlib>
#include <iostream>

#include "parkmat/matroid.hpp"
#include "parkmat/polymatroid.hpp"
#include "parkmat/representation.hpp"
#include "parkmat/set_system.hpp"
#include "parkmat/sqfree.hpp"
#include "parkmat/tutte.hpp"
#include "parkmat/verify.hpp"

using namespace parkmat;

namespace {

struct Timed {
  double serial = 0, parallel = 0;
};

void print_row(const std::string& name, const Timed& t) {
  std::cout << name << ": serial " << t.serial << " s, parallel " << t.parallel
            << " s, speedup " << (t.parallel > 0 ? t.serial / t.parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 18;
  const int d = argc > 2 ? std::atoi(argv[2]) : 5;
  std::cout << "threads available: " << omp_get_max_threads() << "\n";

  // Tutte: 2^n matching-rank sweep plus corank/nullity accumulation
  {
    SetSystem sys = normalize_presentation(random_system(n, d, 1));
    Timed t;
    double t0 = omp_get_wtime();
    TransversalMatroid ms(sys);
    TuttePoly ref = tutte(ms, {n, false});
    t.serial = omp_get_wtime() - t0;
    t0 = omp_get_wtime();
    TransversalMatroid mp(sys);
    TuttePoly par = tutte(mp, {n, true});
    t.parallel = omp_get_wtime() - t0;
    if (!(ref == par)) {
      std::cerr << "MISMATCH: tutte kernels disagree\n";
      return 1;
    }
    print_row("tutte sweep (n=" + std::to_string(sys.n()) + ", d=" +
                  std::to_string(sys.d()) + ", 2^n=" + std::to_string(1LL << sys.n()) + ")",
              t);
  }

  // exact elimination on the graded coefficient matrix
  {
    SetSystem sys = normalize_presentation(random_system(14, 4, 2));
    TransversalMatroid m(sys);
    Representation v = build_representation(sys, ReprMode::random, 2);
    const int k = (m.n() - m.rank_of_matroid()) / 2 + 2;
    Timed t;
    double t0 = omp_get_wtime();
    int ref = graded_dim_via_rank(v, m, k, 1u << 20, false);
    t.serial = omp_get_wtime() - t0;
    t0 = omp_get_wtime();
    int par = graded_dim_via_rank(v, m, k, 1u << 20, true);
    t.parallel = omp_get_wtime() - t0;
    if (ref != par) {
      std::cerr << "MISMATCH: elimination kernels disagree\n";
      return 1;
    }
    print_row("graded rank (n=" + std::to_string(m.n()) + ", k=" + std::to_string(k) +
                  ", dim=" + std::to_string(ref) + ")",
              t);
  }

  // phi sweep over every parking monomial
  {
    SetSystem sys = normalize_presentation(random_system(12, 4, 3));
    TransversalMatroid m(sys);
    Polymatroid p(parking_submodular(m));
    Representation v = build_representation(sys, ReprMode::random, 3);
    auto cocircs = m.cocircuits();
    std::vector<ExponentVec> members;
    for (const auto& layer : p.lattice_points())
      for (const auto& q : layer) members.push_back(q);
    const int count = static_cast<int>(members.size());
    std::vector<char> res_s(count), res_p(count);
    Timed t;
    double t0 = omp_get_wtime();
    for (int i = 0; i < count; ++i)
      res_s[i] = !phi_image(v, members[i], cocircs).is_zero();
    t.serial = omp_get_wtime() - t0;
    t0 = omp_get_wtime();
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
      res_p[i] = !phi_image(v, members[i], cocircs).is_zero();
    t.parallel = omp_get_wtime() - t0;
    if (res_s != res_p) {
      std::cerr << "MISMATCH: phi kernels disagree\n";
      return 1;
    }
    print_row("phi sweep (" + std::to_string(count) + " monomials)", t);
  }

  return 0;
}
