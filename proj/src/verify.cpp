#include "parkmat/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace parkmat {

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

std::string exponent_str(const ExponentVec& q) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out << ",";
    out << q[i];
  }
  out << ")";
  return out.str();
}

GeneratorReport verify_generators_in_nonparking(const std::vector<Hyperplane>& hyperplanes,
                                                const Polymatroid& p, bool parallel) {
  GeneratorReport rep;
  rep.checks.resize(hyperplanes.size());
  const int count = static_cast<int>(hyperplanes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    const Hyperplane& h = hyperplanes[i];
    GeneratorCheck check;
    check.flat = h.flat;
    check.rho = h.rho;
    MVPoly power = expand_power(h.form, h.rho);
    check.term_count = power.terms.size();
    for (const auto& [q, c] : power.terms)
      if (p.member(q)) check.violations.push_back(q);
    rep.checks[i] = std::move(check);
  }
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const GeneratorCheck& c) { return c.violations.empty(); });
  return rep;
}

namespace {

unsigned long long binom_clamped(int n, int k, unsigned long long clamp) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (c > clamp) return clamp + 1;
  }
  return static_cast<unsigned long long>(c);
}

void compositions_lex(int total, int parts, ExponentVec& q, int coord,
                      std::vector<ExponentVec>& out) {
  if (coord == parts - 1) {
    q[coord] = total;
    out.push_back(q);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    q[coord] = v;
    compositions_lex(total - v, parts, q, coord + 1, out);
  }
}

}  // namespace

int graded_dim_via_rank(const Representation& v, const TransversalMatroid& m, int k,
                        std::size_t row_budget, bool parallel) {
  const int n = v.n(), d = v.d();
  if (k < 0 || k > n - d)
    throw std::invalid_argument("graded_dim_via_rank: degree out of range");
  if (binom_clamped(n, k, row_budget) > row_budget)
    throw BudgetError("graded_dim_via_rank: row budget C(n,k) exceeded");

  const Mask full = m.ground_mask();
  std::vector<Mask> row_sets;
  for_each_subset_of_size(n, k, [&](Mask t) {
    if (m.rank(full & ~t) == d) row_sets.push_back(t);
  });

  std::vector<ExponentVec> cols;
  ExponentVec scratch(d, 0);
  compositions_lex(k, d, scratch, 0, cols);
  std::map<ExponentVec, int> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], static_cast<int>(i));

  RatMatrix mat(row_sets.size(), std::vector<Rat>(cols.size(), Rat(0)));
  const int rows = static_cast<int>(row_sets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int r = 0; r < rows; ++r) {
    MVPoly prod = MVPoly::one(d);
    Mask t = row_sets[r];
    while (t) {
      int s = std::countr_zero(t);
      t &= t - 1;
      prod = multiply_by_linear(prod, v.column(s));
    }
    for (const auto& [q, c] : prod.terms) mat[r][col_index.at(q)] = c;
  }
  return mat_rank(std::move(mat), parallel);
}

namespace {

struct StageTimer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::vector<long long> pad_to(std::vector<long long> v, std::size_t len) {
  v.resize(std::max(v.size(), len), 0);
  return v;
}

}  // namespace

VerificationReport run_verification(const SetSystem& input, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.n = input.n();
  rep.input_d = input.d();
  rep.mode = mode_name(opt.mode);
  rep.seed = opt.seed;

  SetSystem sys = normalize_presentation(input);
  rep.d = sys.d();
  rep.renormalized = (sys.d() != input.d());

  TransversalMatroid m(sys);
  const int n = m.n(), d = m.rank_of_matroid();

  auto add_stage = [&rep](const std::string& name, bool pass, std::string detail, double ms) {
    rep.stages.push_back({name, pass, std::move(detail), ms});
  };

  // genericity
  StageTimer t0;
  Representation v;
  bool have_repn = false;
  try {
    v = build_representation(sys, opt.mode, opt.seed);
    have_repn = true;
    add_stage("genericity", true,
              "mode=" + rep.mode + " certified on all column subsets of size <= d", t0.ms());
  } catch (const NotGenericError& e) {
    add_stage("genericity", false, e.what(), t0.ms());
  }

  // matroid invariants
  TutteOptions topt{opt.max_n, opt.parallel};
  TuttePoly tp = tutte(m, topt);
  rep.h_from_tutte = h_vector_from_tutte(tp, n, d);

  Polymatroid p(parking_submodular(m));
  rep.counts = p.graded_counts();
  for (long long c : rep.counts) rep.points_total += c;

  std::vector<Mask> cocircs = m.cocircuits();
  rep.n_cocircuits = cocircs.size();

  std::vector<Hyperplane> hyperplanes;
  if (have_repn) {
    StageTimer t1;
    hyperplanes = hyperplanes_with_forms(v);
    rep.n_hyperplanes = hyperplanes.size();
    std::vector<Mask> complements;
    complements.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) complements.push_back(m.ground_mask() & ~h.flat);
    std::sort(complements.begin(), complements.end());
    bool match = complements == cocircs;
    add_stage("hyperplanes_vs_cocircuits", match,
              std::to_string(hyperplanes.size()) + " hyperplanes, " +
                  std::to_string(cocircs.size()) + " cocircuits",
              t1.ms());

    StageTimer t2;
    GeneratorReport gens = verify_generators_in_nonparking(hyperplanes, p, opt.parallel);
    std::size_t terms = 0;
    std::string witness;
    for (const auto& c : gens.checks) {
      terms += c.term_count;
      if (!c.violations.empty() && witness.empty())
        witness = " violation " + exponent_str(c.violations.front()) + " at H=" +
                  sys.label_set(c.flat);
    }
    add_stage("generator_support", gens.pass,
              std::to_string(gens.checks.size()) + " generators, " + std::to_string(terms) +
                  " support exponents outside P(A)" + witness,
              t2.ms());
  }

  // nonparking ideal generators
  std::vector<ExponentVec> gens = p.minimal_nonmembers();
  rep.n_generators = gens.size();

  if (have_repn) {
    // phi kernel, both directions
    StageTimer t3;
    std::vector<ExponentVec> members;
    for (const auto& pts : p.lattice_points())
      for (const auto& q : pts) members.push_back(q);
    const int ng = static_cast<int>(gens.size()), nm = static_cast<int>(members.size());
    std::vector<char> gen_zero(ng, 0), mem_nonzero(nm, 0);
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int i = 0; i < ng; ++i) gen_zero[i] = phi_image(v, gens[i], cocircs).is_zero();
    bool all_zero = std::all_of(gen_zero.begin(), gen_zero.end(), [](char c) { return c; });
    std::string wit0;
    for (int i = 0; i < ng && wit0.empty(); ++i)
      if (!gen_zero[i]) wit0 = " phi(x^" + exponent_str(gens[i]) + ") != 0";
    add_stage("phi_zero_on_nonparking", all_zero,
              std::to_string(ng) + " minimal nonparking exponents" + wit0, t3.ms());

    StageTimer t4;
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int i = 0; i < nm; ++i) mem_nonzero[i] = !phi_image(v, members[i], cocircs).is_zero();
    bool all_nonzero =
        std::all_of(mem_nonzero.begin(), mem_nonzero.end(), [](char c) { return c; });
    std::string wit1;
    for (int i = 0; i < nm && wit1.empty(); ++i)
      if (!mem_nonzero[i]) wit1 = " phi(x^" + exponent_str(members[i]) + ") = 0";
    add_stage("phi_nonzero_on_parking", all_nonzero,
              std::to_string(nm) + " parking exponents" + wit1, t4.ms());

    // graded dimension triple: Tutte specialization, lattice counts, matrix rank
    StageTimer t5;
    const int kmax = (opt.max_degree >= 0) ? std::min(opt.max_degree, n - d) : n - d;
    bool triple = true;
    for (int k = 0; k <= kmax; ++k)
      rep.lambda_dims.push_back(graded_dim_via_rank(v, m, k, opt.row_budget, opt.parallel));
    auto padded_counts = pad_to(rep.counts, rep.h_from_tutte.size());
    for (int k = 0; k <= kmax; ++k)
      if (rep.h_from_tutte[k] != padded_counts[k] || rep.h_from_tutte[k] != rep.lambda_dims[k])
        triple = false;
    for (std::size_t k = static_cast<std::size_t>(kmax) + 1; k < rep.h_from_tutte.size(); ++k)
      if (rep.h_from_tutte[k] != padded_counts[k]) triple = false;
    add_stage("h_vector_triple", triple,
              "tutte=" + vec_str(rep.h_from_tutte) + " counts=" + vec_str(rep.counts) +
                  " rank=" + vec_str(rep.lambda_dims),
              t5.ms());
  }

  StageTimer t6;
  auto purity = p.purity_check();
  add_stage("purity", purity.pure,
            purity.pure ? "all points dominated by a top-degree point"
                        : "undominated point " + exponent_str(purity.witness),
            t6.ms());

  rep.pass = have_repn && std::all_of(rep.stages.begin(), rep.stages.end(),
                                      [](const StageResult& s) { return s.pass; });
  return rep;
}

}  // namespace parkmat
