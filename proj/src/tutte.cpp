#include "parkmat/tutte.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "parkmat/rational.hpp"

namespace parkmat {

long long TuttePoly::eval11() const {
  long long s = 0;
  for (const auto& [e, c] : terms) s += c;
  return s;
}

std::string TuttePoly::text() const {
  // descending total degree, then ascending x degree
  std::vector<std::pair<std::pair<int, int>, long long>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first < b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    if (!first) out << " + ";
    first = false;
    auto [i, j] = e;
    if (c != 1 || (i == 0 && j == 0)) out << c;
    if (i > 0) {
      out << "x";
      if (i > 1) out << "^" << i;
    }
    if (j > 0) {
      out << "y";
      if (j > 1) out << "^" << j;
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

using CountTable = std::vector<std::vector<std::uint64_t>>;  // [corank][nullity]

CountTable zero_table(int d, int n) {
  return CountTable(d + 1, std::vector<std::uint64_t>(n + 1, 0));
}

// Expand sum_{a,b} N[a][b] (x-1)^a (y-1)^b. Alternating partial sums can
// exceed 64 bits even though final coefficients are bounded by 2^n, so the
// accumulation runs over big integers.
TuttePoly expand_counts(const CountTable& counts, int d, int n) {
  std::vector<std::vector<BigInt>> binom(std::max(d, n) + 1);
  for (int a = 0; a < static_cast<int>(binom.size()); ++a) {
    binom[a].resize(a + 1);
    for (int i = 0; i <= a; ++i) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), a, i);
      binom[a][i] = b;
    }
  }
  std::map<std::pair<int, int>, BigInt> acc;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= n; ++b) {
      if (counts[a][b] == 0) continue;
      BigInt cnt(static_cast<unsigned long>(counts[a][b]));
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
          BigInt term = cnt * binom[a][i] * binom[b][j];
          if (((a - i) + (b - j)) % 2 != 0) term = -term;
          acc[{i, j}] += term;
        }
    }
  TuttePoly t;
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    if (!c.fits_slong_p())
      throw std::overflow_error("tutte: coefficient exceeds long long");
    t.terms.emplace(e, c.get_si());
  }
  return t;
}

}  // namespace

TuttePoly tutte(const TransversalMatroid& m, const TutteOptions& opt) {
  const int n = m.n(), d = m.rank_of_matroid();
  if (n > opt.max_n) throw BudgetError("tutte: 2^n subset sweep budget exceeded");
  const auto& table = m.rank_table(opt.parallel);
  const std::int64_t total = std::int64_t{1} << n;
  CountTable counts = zero_table(d, n);
  if (opt.parallel) {
#pragma omp parallel
    {
      CountTable local = zero_table(d, n);
#pragma omp for schedule(static) nowait
      for (std::int64_t t = 0; t < total; ++t) {
        int r = table[t];
        ++local[d - r][popcount(static_cast<Mask>(t)) - r];
      }
#pragma omp critical
      {
        for (int a = 0; a <= d; ++a)
          for (int b = 0; b <= n; ++b) counts[a][b] += local[a][b];
      }
    }
  } else {
    for (std::int64_t t = 0; t < total; ++t) {
      int r = table[t];
      ++counts[d - r][popcount(static_cast<Mask>(t)) - r];
    }
  }
  return expand_counts(counts, d, n);
}

TuttePoly tutte_reference(const TransversalMatroid& m, int max_n) {
  const int n = m.n(), d = m.rank_of_matroid();
  if (n > max_n) throw BudgetError("tutte: 2^n subset sweep budget exceeded");
  const std::int64_t total = std::int64_t{1} << n;
  CountTable counts = zero_table(d, n);
  for (std::int64_t t = 0; t < total; ++t) {
    int r = max_matching(m.system(), static_cast<Mask>(t)).size;
    ++counts[d - r][popcount(static_cast<Mask>(t)) - r];
  }
  return expand_counts(counts, d, n);
}

HVector h_vector_from_tutte(const TuttePoly& t, int n, int d) {
  HVector h(n - d + 1, 0);
  for (const auto& [e, c] : t.terms) h[n - d - e.second] += c;
  return h;
}

HVector h_vector_from_tutte(const TransversalMatroid& m, const TutteOptions& opt) {
  return h_vector_from_tutte(tutte(m, opt), m.n(), m.rank_of_matroid());
}

}  // namespace parkmat
