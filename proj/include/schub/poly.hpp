#pragma once

#include <cstdint>
#include <map>
#include <type_traits>
#include <vector>

#include "schub/bigint.hpp"
#include "schub/error.hpp"

namespace schub {

// Exponent-map polynomial: a finite map from integer exponent vectors to
// nonzero coefficients. One container serves the polynomial ring in the
// simple roots (nonnegative exponents), the character ring (Laurent
// exponents), and the double-Schubert x/y ring; the Tag keeps them from
// mixing. Term product always adds exponents and multiplies coefficients.
template <class Coeff, class Tag>
class ExpPoly {
 public:
  using Exp = std::vector<int32_t>;
  using Map = std::map<Exp, Coeff>;  // lex-ordered: deterministic iteration

  ExpPoly() : nvars_(0) {}
  explicit ExpPoly(int nvars) : nvars_(nvars) {}

  static ExpPoly constant(int nvars, Coeff c) {
    ExpPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exp(nvars, 0), std::move(c));
    return p;
  }
  static ExpPoly monomial(Exp e, Coeff c) {
    ExpPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  Coeff coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exp& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ExpPoly& operator+=(const ExpPoly& o) {
    adopt_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    adopt_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ExpPoly operator+(const ExpPoly& o) const {
    ExpPoly r = *this;
    r += o;
    return r;
  }
  ExpPoly operator-(const ExpPoly& o) const {
    ExpPoly r = *this;
    r -= o;
    return r;
  }
  ExpPoly operator-() const {
    ExpPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  ExpPoly operator*(const ExpPoly& o) const {
    int n = nvars_ ? nvars_ : o.nvars_;
    SCHUB_INTERNAL_CHECK(is_zero() || o.is_zero() || nvars_ == o.nvars_,
                         "polynomial variable-count mismatch");
    ExpPoly r(n);
    Exp e(n);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

  ExpPoly operator*(const Coeff& s) const {
    ExpPoly r(nvars_);
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  bool operator==(const ExpPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const ExpPoly& o) const { return !(*this == o); }
  // Lex compare of term maps; a deterministic total order for containers.
  bool operator<(const ExpPoly& o) const { return terms_ < o.terms_; }

  int total_degree_max() const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int32_t x : e) d += x;
      if (first || d > best) best = d;
      first = false;
    }
    return best;
  }

  // Leading term under the lex order (largest exponent vector).
  std::pair<Exp, Coeff> leading() const {
    SCHUB_INTERNAL_CHECK(!terms_.empty(), "leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

 private:
  void adopt_vars(const ExpPoly& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    SCHUB_INTERNAL_CHECK(nvars_ == o.nvars_ || o.is_zero(),
                         "polynomial variable-count mismatch");
  }

  int nvars_;
  Map terms_;
};

// Exact division f / g for polynomials known to divide evenly, by
// leading-term elimination in lex order. Throws InternalError when the
// division is inexact, which signals an arithmetic bug upstream, never
// user error.
template <class Coeff, class Tag>
ExpPoly<Coeff, Tag> divide_exact(const ExpPoly<Coeff, Tag>& f,
                                 const ExpPoly<Coeff, Tag>& g) {
  using P = ExpPoly<Coeff, Tag>;
  SCHUB_INTERNAL_CHECK(!g.is_zero(), "division by zero polynomial");
  if (f.is_zero()) return P(f.nvars() ? f.nvars() : g.nvars());
  int n = g.nvars();
  P q(n), r = f;
  auto [eg, cg] = g.leading();
  size_t guard = 0;
  while (!r.is_zero()) {
    auto [er, cr] = r.leading();
    typename P::Exp e(n);
    for (int i = 0; i < n; ++i) e[i] = er[i] - eg[i];
    if constexpr (std::is_same_v<Coeff, Int>) {
      SCHUB_INTERNAL_CHECK(cr % cg == 0, "inexact coefficient in division");
    }
    Coeff c = cr / cg;
    P m = P::monomial(e, c);
    q += m;
    r -= m * g;
    SCHUB_INTERNAL_CHECK(++guard < (size_t(1) << 24), "division does not terminate");
  }
  return q;
}

struct HTag {};   // Z[alpha_1..alpha_n], nonnegative exponents
struct KTag {};   // Z[e^{+-alpha_1..}], Laurent exponents over the root lattice
struct XYTag {};  // Z[x_1..x_n, y_1..y_n] for double Schubert polynomials

using HPoly = ExpPoly<Int, HTag>;
using QHPoly = ExpPoly<Rat, HTag>;
using KElem = ExpPoly<Int, KTag>;
using XYPoly = ExpPoly<Int, XYTag>;

}  // namespace schub
