#include "schub/oracle.hpp"

#include <algorithm>
#include <bit>

namespace schub {

namespace {

void check_type_a(const WeylGroup& g, size_t n) {
  SCHUB_REQUIRE(static_cast<size_t>(g.rank()) + 1 == n,
                "permutation size does not match rank+1");
  CartanData a = CartanData::builtin('A', g.rank());
  SCHUB_REQUIRE(g.cartan() == a, "permutation input needs a type-A group");
}

void check_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    SCHUB_REQUIRE(v >= 1 && v <= static_cast<int>(p.size()) && !seen[v],
                  "not a permutation in one-line notation");
    seen[v] = true;
  }
}

}  // namespace

WeylElement element_from_permutation(const WeylGroup& g,
                                     const std::vector<int>& one_line) {
  check_type_a(g, one_line.size());
  check_permutation(one_line);
  // Strip one-line descents by right multiplication; the reversed strip
  // sequence is a reduced word.
  std::vector<int> p = one_line;
  std::vector<int> strip;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        strip.push_back(static_cast<int>(i));
        changed = true;
        break;
      }
    }
  }
  std::reverse(strip.begin(), strip.end());
  return g.element_of_word(Word(std::move(strip)));
}

std::vector<int> permutation_of_element(const WeylGroup& g, WeylElement w) {
  int n = g.rank() + 1;
  check_type_a(g, n);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  const Word& word = w.canonical_word();
  // w = r_{c1} o ... o r_{ck} as functions; compose right-to-left, each
  // generator acting as the value transposition (i, i+1).
  for (size_t t = word.size(); t-- > 0;) {
    int i = word[t];
    for (auto& v : p) {
      if (v == i + 1) v = i + 2;
      else if (v == i + 2) v = i + 1;
    }
  }
  return p;
}

XYPoly xy_variable(int index, int n2) {
  XYPoly::Exp e(n2, 0);
  e[index] = 1;
  return XYPoly::monomial(std::move(e), 1);
}

namespace {

// x_i - y_j with both 0-based.
XYPoly x_minus_y(int i, int j, int n) {
  return xy_variable(i, 2 * n) - xy_variable(n + j, 2 * n);
}

// Divided difference in the x variables for 0-based generator i.
XYPoly del_x(const XYPoly& f, int i, int n) {
  XYPoly swapped(2 * n);
  for (const auto& [e, c] : f.terms()) {
    XYPoly::Exp s = e;
    std::swap(s[i], s[i + 1]);
    swapped.add_term(s, c);
  }
  XYPoly xdiff = xy_variable(i, 2 * n) - xy_variable(i + 1, 2 * n);
  return divide_exact(f - swapped, xdiff);
}

}  // namespace

XYPoly double_schubert(const std::vector<int>& v, int n) {
  SCHUB_REQUIRE(static_cast<int>(v.size()) == n, "permutation size mismatch");
  check_permutation(v);
  XYPoly s = XYPoly::constant(2 * n, 1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; i + j + 1 < n; ++j) s *= x_minus_y(i, j, n);
  if (n == 1) return s;
  WeylGroup g(CartanData::builtin('A', n - 1));
  std::vector<int> w0(n);
  for (int i = 0; i < n; ++i) w0[i] = n - i;
  WeylElement w0e = element_from_permutation(g, w0);
  WeylElement ve = element_from_permutation(g, v);
  Word word = g.multiply(w0e, ve).canonical_word();
  for (int letter : word.letters) s = del_x(s, letter, n);
  return s;
}

HPoly oracle_restriction_H(const WeylGroup& g, const std::vector<int>& v,
                           const std::vector<int>& w, DSConvention conv) {
  int n = static_cast<int>(v.size());
  check_type_a(g, v.size());
  SCHUB_REQUIRE(v.size() == w.size(), "permutation sizes differ");
  check_permutation(w);
  XYPoly s = double_schubert(v, n);

  std::vector<int> sigma = w;
  if (conv == DSConvention::Inverse) {
    for (int i = 0; i < n; ++i) sigma[w[i] - 1] = i + 1;
  }

  // x_i -> y_{sigma(i)}: fold x exponents onto the y block.
  XYPoly ypoly(2 * n);
  for (const auto& [e, c] : s.terms()) {
    XYPoly::Exp f(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      f[n + sigma[i] - 1] += e[i];
      f[n + i] += e[n + i];
    }
    ypoly.add_term(f, c);
  }

  // Rewrite in simple roots via y_k = -(alpha_k + ... + alpha_{n-2}),
  // which realizes alpha_i = y_{i+1} - y_i.
  int rank = n - 1;
  std::vector<HPoly> yimg(n);
  for (int k = 0; k < n; ++k) {
    HPoly lin(rank);
    for (int t = k; t < rank; ++t) lin -= h_alpha(t, rank);
    yimg[k] = lin;
  }
  HPoly out(rank);
  for (const auto& [e, c] : ypoly.terms()) {
    HPoly term = HPoly::constant(rank, c);
    for (int k = 0; k < n; ++k)
      for (int32_t t = 0; t < e[n + k]; ++t) term *= yimg[k];
    out += term;
  }

  // Exactness: map the candidate back through alpha_i = y_{i+1} - y_i and
  // compare; a mismatch means the value was not in the root subring.
  XYPoly back(2 * n);
  for (const auto& [e, c] : out.terms()) {
    XYPoly term = XYPoly::constant(2 * n, c);
    for (int i = 0; i < rank; ++i)
      for (int32_t t = 0; t < e[i]; ++t)
        term *= (xy_variable(n + i + 1, 2 * n) - xy_variable(n + i, 2 * n));
    back += term;
  }
  SCHUB_INTERNAL_CHECK(back == ypoly,
                       "double Schubert restriction not in root subring");
  return out;
}

const RingValue& RestrictionTable::get(WeylElement v, WeylElement x) {
  auto key = std::make_pair(v.id(), x.id());
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  RingValue val;
  val.theory = theory_;
  if (theory_ == Theory::H) {
    val.h = restriction_H(g_, v, x);
    val.k = KElem(g_.rank());
  } else {
    val.h = HPoly(g_.rank());
    val.k = restriction_K(g_, v, x, theory_);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return memo_.emplace(key, std::move(val)).first->second;
}

std::map<WeylElement, RingValue> localization_solve(const WeylGroup& g,
                                                    WeylElement u,
                                                    WeylElement v,
                                                    Theory theory,
                                                    RestrictionTable* shared) {
  RestrictionTable own(g, theory);
  RestrictionTable& table = shared ? *shared : own;
  std::vector<WeylElement> elems = g.enumerate();  // length-increasing
  std::map<WeylElement, RingValue> out;
  for (WeylElement x : elems) {
    const RingValue& ru = table.get(u, x);
    const RingValue& rv = table.get(v, x);
    RingValue rhs;
    rhs.theory = theory;
    rhs.h = ru.h * rv.h;
    rhs.k = ru.k * rv.k;
    for (const auto& [w, m] : out) {
      const RingValue& rw = table.get(w, x);
      rhs.h -= m.h * rw.h;
      rhs.k -= m.k * rw.k;
    }
    if (rhs.is_zero()) continue;
    const RingValue& pivot = table.get(x, x);
    RingValue m;
    m.theory = theory;
    if (theory == Theory::H) {
      m.h = divide_exact(rhs.h, pivot.h);
      m.k = KElem(g.rank());
    } else {
      m.h = HPoly(g.rank());
      m.k = divide_exact(rhs.k, pivot.k);
    }
    out.emplace(x, std::move(m));
  }
  return out;
}

RationalSample SampleStream::next() {
  RationalSample s;
  std::uniform_int_distribution<int> dist(2, 97);
  for (int i = 0; i < rank_; ++i) {
    int p = dist(rng_), q = dist(rng_);
    while (q == p) q = dist(rng_);
    s.char_value.push_back(Rat(p, q));
  }
  return s;
}

namespace {

Rat rat_pow(const Rat& base, int32_t e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  int32_t k = e > 0 ? e : -e;
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

Rat eval_at_sample(const KElem& f, const RationalSample& s) {
  Rat total(0);
  for (const auto& [e, c] : f.terms()) {
    Rat term(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rat_pow(s.char_value[i], e[i]);
    total += term;
  }
  return total;
}

std::optional<Rat> woods_hole_pair(const WeylGroup& g, const Word& q,
                                   const std::map<Mask, KElem>& gamma, Mask r,
                                   const RationalSample& s, Sheaf sheaf) {
  SCHUB_REQUIRE(q.size() <= 31, "word too long");
  auto rpos = mask_positions(r, q.size());
  Rat total(0);
  // Iterate submasks J of R; J = r then (j-1)&r walks them all.
  Mask j = r;
  while (true) {
    auto it = gamma.find(j);
    if (it != gamma.end() && !it->second.is_zero()) {
      // Tangent weights at the fixed point J of BS^R: for each i in R the
      // root (prod_{t in J, t <= i} r_t) alpha_i.
      Rat denom(1);
      WeylElement cur = g.identity();
      for (int k : rpos) {
        bool in_j = (j >> k) & 1u;
        if (in_j) cur = g.right_mul(cur, q[k]);
        Weight beta = g.act(cur, Weight::simple_root(q[k], g.rank()));
        Rat ew(1);
        for (int t = 0; t < g.rank(); ++t)
          if (beta.coords[t]) ew *= rat_pow(s.char_value[t], beta.coords[t]);
        Rat factor = Rat(1) - ew;
        if (factor == 0) return std::nullopt;
        if (sheaf == Sheaf::Ideal && !in_j) factor *= Rat(1) / ew;
        denom *= factor;
      }
      total += eval_at_sample(it->second, s) / denom;
    }
    if (j == 0) break;
    j = (j - 1) & r;
  }
  return total;
}

std::map<Mask, KElem> bs_restriction_family(const WeylGroup& g, const Word& q,
                                            Mask v, Theory theory) {
  SCHUB_REQUIRE(theory != Theory::H, "K-theory restriction family only");
  std::map<Mask, KElem> out;
  size_t total = size_t(1) << q.size();
  for (Mask j = 0; j < total; ++j) {
    if ((v & ~j) != 0) continue;  // tau_V|_J = 0 unless V inside J
    RingValue val = bs_restriction(g, q, v, j, theory);
    if (!val.k.is_zero()) out.emplace(j, std::move(val.k));
  }
  return out;
}

std::optional<std::map<Mask, Rat>> bs_expand_at_sample(
    const WeylGroup& g, const Word& q, Theory theory,
    const std::function<Rat(Mask)>& point_value, const RationalSample& s) {
  SCHUB_REQUIRE(q.size() <= 20, "word too long for basis expansion");
  size_t total = size_t(1) << q.size();
  // Masks in increasing popcount order so the inclusion-triangular system
  // solves forward.
  std::vector<Mask> order;
  for (Mask m = 0; m < total; ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  // restriction value tau_J|_L at the sample, J inside L
  std::map<std::pair<Mask, Mask>, Rat> mat;
  for (Mask l = 0; l < total; ++l) {
    Mask j = l;
    while (true) {
      mat[{j, l}] = eval_at_sample(bs_restriction(g, q, j, l, theory).k, s);
      if (j == 0) break;
      j = (j - 1) & l;
    }
  }
  std::map<Mask, Rat> coeff;
  for (Mask l : order) {
    Rat rhs = point_value(l);
    Mask j = l;
    while (true) {
      if (j != l) {
        auto it = coeff.find(j);
        if (it != coeff.end()) rhs -= it->second * mat[{j, l}];
      }
      if (j == 0) break;
      j = (j - 1) & l;
    }
    Rat diag = mat[{l, l}];
    if (diag == 0) return std::nullopt;
    coeff[l] = rhs / diag;
  }
  return coeff;
}

}  // namespace schub
