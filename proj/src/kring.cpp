#include "schub/kring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace schub {

KElem k_one(int n) { return KElem::constant(n, 1); }

KElem k_char(const Weight& lambda) {
  KElem::Exp e(lambda.coords.begin(), lambda.coords.end());
  return KElem::monomial(std::move(e), 1);
}

KElem k_e_alpha(int i, int n, int sign) {
  SCHUB_REQUIRE(i >= 0 && i < n, "simple root index out of range");
  KElem::Exp e(n, 0);
  e[i] = sign;
  return KElem::monomial(std::move(e), 1);
}

KElem k_one_minus_e_neg(int i, int n) {
  return k_one(n) - k_e_alpha(i, n, -1);
}

KElem weyl_act_k(const WeylGroup& g, WeylElement w, const KElem& f) {
  SCHUB_REQUIRE(f.is_zero() || f.nvars() == g.rank(), "rank mismatch");
  if (w.is_identity() || f.is_zero()) return f;
  int n = g.rank();
  KElem out(n);
  for (const auto& [e, c] : f.terms()) {
    Weight lam(std::vector<int32_t>(e.begin(), e.end()));
    Weight img = g.act(w, lam);
    out.add_term(KElem::Exp(img.coords.begin(), img.coords.end()), c);
  }
  return out;
}

KElem divide_by_one_minus_e_neg(int i, const KElem& f) {
  if (f.is_zero()) return f;
  int n = f.nvars();
  SCHUB_REQUIRE(i >= 0 && i < n, "generator index out of range");
  // Group terms by the exponents away from coordinate i; on each fiber the
  // quotient by (1 - e^{-alpha_i}) is the suffix-sum recursion
  // q_k = f_k + q_{k+1}, exact iff the fiber coefficients sum to zero.
  std::map<KElem::Exp, std::map<int32_t, Int>> fibers;
  for (const auto& [e, c] : f.terms()) {
    KElem::Exp base = e;
    int32_t k = base[i];
    base[i] = 0;
    fibers[std::move(base)][k] = c;
  }
  KElem out(n);
  for (auto& [base, fiber] : fibers) {
    // q_k is the suffix sum of the fiber over exponents >= k; it is constant
    // (and possibly nonzero) on the gaps between stored exponents, so walk
    // the whole range.
    int32_t hi = fiber.rbegin()->first;
    int32_t lo = fiber.begin()->first;
    Int run = 0;
    for (int32_t k = hi; k > lo; --k) {
      auto it = fiber.find(k);
      if (it != fiber.end()) run += it->second;
      if (run != 0) {
        KElem::Exp e = base;
        e[i] = k;
        out.add_term(e, run);
      }
    }
    run += fiber.begin()->second;
    SCHUB_INTERNAL_CHECK(run == 0,
                         "inexact division by (1 - e^{-alpha}); fiber sum nonzero");
  }
  return out;
}

KElem demazure(const WeylGroup& g, int i, const KElem& f) {
  SCHUB_REQUIRE(i >= 0 && i < g.rank(), "generator index out of range");
  return divide_by_one_minus_e_neg(i, f - weyl_act_k(g, g.generator(i), f));
}

KElem isobaric_demazure(const WeylGroup& g, int i, const KElem& f) {
  SCHUB_REQUIRE(i >= 0 && i < g.rank(), "generator index out of range");
  KElem moved = k_e_alpha(i, g.rank(), -1) * weyl_act_k(g, g.generator(i), f);
  return divide_by_one_minus_e_neg(i, f - moved);
}

std::vector<QHPoly> exp_truncation(const KElem& f, int d) {
  SCHUB_REQUIRE(d >= 0, "truncation degree must be nonnegative");
  int n = f.nvars();
  std::vector<QHPoly> comps(d + 1, QHPoly(n));
  for (const auto& [e, c] : f.terms()) {
    // Homogeneous pieces of e^lambda up to degree d: lambda^k / k!.
    Weight lam(std::vector<int32_t>(e.begin(), e.end()));
    QHPoly lin = QHPoly(n);
    for (int j = 0; j < n; ++j) {
      if (lam.coords[j]) {
        QHPoly::Exp ex(n, 0);
        ex[j] = 1;
        lin.add_term(ex, Rat(lam.coords[j]));
      }
    }
    QHPoly pow = QHPoly::constant(n, 1);
    Rat factorial = 1;
    comps[0] += pow * Rat(c);
    for (int k = 1; k <= d; ++k) {
      pow *= lin;
      factorial *= k;
      comps[k] += pow * (Rat(c) / factorial);
    }
  }
  return comps;
}

QHPoly associated_graded(const KElem& f, int d) {
  if (d < 0) return QHPoly(f.nvars());
  return exp_truncation(f, d)[d];
}

std::string to_string(const KElem& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<KElem::Exp, Int>> terms(f.terms().begin(),
                                                f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1) os << abs << "*";
    os << "e[";
    for (size_t j = 0; j < e.size(); ++j) {
      if (j) os << ",";
      os << e[j];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace schub
