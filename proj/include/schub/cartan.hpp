#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "schub/error.hpp"

namespace schub {

// A weight in simple-root coordinates: the i-th simple root is the i-th
// standard basis vector. All computations stay inside the root lattice.
struct Weight {
  std::vector<int32_t> coords;

  Weight() = default;
  explicit Weight(std::vector<int32_t> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int32_t>(rank, 0)); }
  static Weight simple_root(int i, int rank);

  int rank() const { return static_cast<int>(coords.size()); }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Generalized Cartan matrix with the pairing convention
//   a_{ij} = <alpha_i^vee, alpha_j>,   r_i(alpha_j) = alpha_j - a_{ij} alpha_i.
class CartanData {
 public:
  // Validates: a_{ii} = 2, a_{ij} <= 0 off-diagonal, zero pattern symmetric.
  static CartanData from_matrix(int rank, std::vector<int32_t> entries);

  // Built-in families: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=2), G_2.
  // Labels follow the convention that in B_n the last root is short and in
  // C_n the last root is long; D_2 is the orthogonal pair A_1 x A_1.
  static CartanData builtin(char family, int rank);

  // Parses a type tag like "A3", "B2", "G2", or "D4".
  static CartanData from_type_string(const std::string& tag);

  // File format: first line n, then n lines of n space-separated integers.
  static CartanData from_stream(std::istream& in);
  static CartanData from_file(const std::string& path);

  int rank() const { return rank_; }
  int32_t entry(int i, int j) const { return entries_[i * rank_ + j]; }
  const std::vector<int32_t>& entries() const { return entries_; }

  // r_i(lambda) = lambda - (sum_j a_{ij} lambda_j) alpha_i.  Involutive.
  Weight reflect(int i, const Weight& lambda) const;

  // Coxeter order m_{ij} of r_i r_j from a_{ij} a_{ji} in {0,1,2,3};
  // returns 0 when the product is >= 4 (infinite order).
  int coxeter_order(int i, int j) const;

  bool operator==(const CartanData& o) const {
    return rank_ == o.rank_ && entries_ == o.entries_;
  }

 private:
  CartanData(int rank, std::vector<int32_t> e)
      : rank_(rank), entries_(std::move(e)) {}
  int rank_;
  std::vector<int32_t> entries_;  // row-major rank x rank
};

}  // namespace schub
