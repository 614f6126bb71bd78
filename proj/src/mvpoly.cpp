#include "parkmat/mvpoly.hpp"

#include <sstream>

namespace parkmat {

MVPoly MVPoly::one(int nvars) {
  MVPoly p;
  p.nvars = nvars;
  p.terms.emplace(ExponentVec(nvars, 0), Rat(1));
  return p;
}

void MVPoly::add(const ExponentVec& q, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int MVPoly::degree() const {
  int deg = 0;
  for (const auto& [q, c] : terms) deg = std::max(deg, degree_of(q));
  return deg;
}

std::string monomial_text(const ExponentVec& q, const std::string& var) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    if (any) out << " ";
    out << var << "_" << j + 1;
    if (q[j] > 1) out << "^" << q[j];
    any = true;
  }
  if (!any) out << "1";
  return out.str();
}

std::string MVPoly::text(const std::string& var) const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, c] : terms) {
    if (!first) out << " + ";
    first = false;
    if (c != 1 || degree_of(q) == 0) {
      out << rat_str(c);
      if (degree_of(q) > 0) out << " ";
    }
    if (degree_of(q) > 0) out << monomial_text(q, var);
  }
  return out.str();
}

MVPoly multiply_by_linear(const MVPoly& p, const std::vector<Rat>& coeffs) {
  MVPoly out;
  out.nvars = p.nvars;
  ExponentVec q;
  for (const auto& [base, c] : p.terms) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      q = base;
      ++q[j];
      out.add(q, c * coeffs[j]);
    }
  }
  return out;
}

MVPoly expand_power(const std::vector<Rat>& form, int e) {
  MVPoly p = MVPoly::one(static_cast<int>(form.size()));
  for (int i = 0; i < e; ++i) p = multiply_by_linear(p, form);
  return p;
}

}  // namespace parkmat
