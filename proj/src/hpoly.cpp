#include "schub/hpoly.hpp"

#include <algorithm>
#include <sstream>

namespace schub {

HPoly h_alpha(int i, int n) {
  SCHUB_REQUIRE(i >= 0 && i < n, "simple root index out of range");
  HPoly::Exp e(n, 0);
  e[i] = 1;
  return HPoly::monomial(std::move(e), 1);
}

HPoly h_linear(const Weight& lambda) {
  HPoly p(lambda.rank());
  for (int i = 0; i < lambda.rank(); ++i) {
    if (lambda.coords[i]) {
      HPoly::Exp e(lambda.rank(), 0);
      e[i] = 1;
      p.add_term(e, lambda.coords[i]);
    }
  }
  return p;
}

HPoly h_one(int n) { return HPoly::constant(n, 1); }

HPoly weyl_act_h(const WeylGroup& g, WeylElement w, const HPoly& p) {
  SCHUB_REQUIRE(p.is_zero() || p.nvars() == g.rank(), "rank mismatch");
  if (w.is_identity() || p.is_zero()) return p;
  int n = g.rank();
  // Image of each variable as a linear form, with powers memoized per call.
  std::vector<std::vector<HPoly>> powers(n);
  for (int j = 0; j < n; ++j) {
    Weight img = g.act(w, Weight::simple_root(j, n));
    powers[j].push_back(h_one(n));
    powers[j].push_back(h_linear(img));
  }
  auto power = [&](int j, int k) -> const HPoly& {
    while (static_cast<int>(powers[j].size()) <= k)
      powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][k];
  };
  HPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    HPoly term = HPoly::constant(n, c);
    for (int j = 0; j < n; ++j)
      if (e[j]) term *= power(j, e[j]);
    out += term;
  }
  return out;
}

HPoly divided_difference(const WeylGroup& g, int i, const HPoly& p) {
  SCHUB_REQUIRE(i >= 0 && i < g.rank(), "generator index out of range");
  if (p.is_zero()) return p;
  HPoly num = p - weyl_act_h(g, g.generator(i), p);
  // p - r_i p vanishes at alpha_i = 0, so after cancellation every stored
  // monomial carries a positive power of alpha_i.
  HPoly out(p.nvars());
  for (const auto& [e, c] : num.terms()) {
    SCHUB_INTERNAL_CHECK(e[i] >= 1, "divided difference numerator not divisible");
    HPoly::Exp f = e;
    f[i] -= 1;
    out.add_term(f, c);
  }
  return out;
}

namespace {

template <class Coeff>
std::string poly_to_string(const ExpPoly<Coeff, HTag>& p) {
  if (p.is_zero()) return "0";
  using Exp = typename ExpPoly<Coeff, HTag>::Exp;
  std::vector<std::pair<Exp, Coeff>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const Exp& e) {
    int d = 0;
    for (int32_t x : e) d += x;
    return d;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return b.first < a.first;  // within a degree, a1 before a2 before a3
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Coeff abs = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t j = 0; j < e.size(); ++j) {
      if (!e[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      os << abs;
    } else {
      if (abs != 1) os << abs << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const HPoly& p) { return poly_to_string(p); }
std::string to_string(const QHPoly& p) { return poly_to_string(p); }

QHPoly to_rational(const HPoly& p) {
  QHPoly q(p.nvars());
  for (const auto& [e, c] : p.terms()) q.add_term(e, Rat(c));
  return q;
}

}  // namespace schub
