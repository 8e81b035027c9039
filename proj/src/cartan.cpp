#include "schub/cartan.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "schub/error.hpp"

namespace schub {

Weight Weight::simple_root(int i, int rank) {
  SCHUB_REQUIRE(i >= 0 && i < rank, "simple root index out of range");
  Weight w = zero(rank);
  w.coords[i] = 1;
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  SCHUB_REQUIRE(rank() == o.rank(), "weight rank mismatch");
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  SCHUB_REQUIRE(rank() == o.rank(), "weight rank mismatch");
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ",";
    os << w.coords[i];
  }
  return os << "]";
}

CartanData CartanData::from_matrix(int rank, std::vector<int32_t> entries) {
  SCHUB_REQUIRE(rank >= 1, "rank must be positive");
  SCHUB_REQUIRE(static_cast<int>(entries.size()) == rank * rank,
                "Cartan matrix must be " << rank << "x" << rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      int32_t a = entries[i * rank + j];
      if (i == j) {
        SCHUB_REQUIRE(a == 2, "diagonal Cartan entry must be 2, got " << a);
      } else {
        SCHUB_REQUIRE(a <= 0, "off-diagonal Cartan entry must be <= 0");
        int32_t b = entries[j * rank + i];
        SCHUB_REQUIRE((a == 0) == (b == 0),
                      "Cartan zero pattern must be symmetric at (" << i + 1
                      << "," << j + 1 << ")");
      }
    }
  }
  return CartanData(rank, std::move(entries));
}

CartanData CartanData::builtin(char family, int rank) {
  auto chain = [&](int n) {
    std::vector<int32_t> e(n * n, 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = 2;
    for (int i = 0; i + 1 < n; ++i) {
      e[i * n + i + 1] = -1;
      e[(i + 1) * n + i] = -1;
    }
    return e;
  };
  switch (family) {
    case 'A': {
      SCHUB_REQUIRE(rank >= 1, "A_n needs n >= 1");
      return CartanData(rank, chain(rank));
    }
    case 'B': {
      SCHUB_REQUIRE(rank >= 2, "B_n needs n >= 2");
      auto e = chain(rank);
      e[(rank - 2) * rank + (rank - 1)] = -1;
      e[(rank - 1) * rank + (rank - 2)] = -2;
      return CartanData(rank, std::move(e));
    }
    case 'C': {
      SCHUB_REQUIRE(rank >= 2, "C_n needs n >= 2");
      auto e = chain(rank);
      e[(rank - 2) * rank + (rank - 1)] = -2;
      e[(rank - 1) * rank + (rank - 2)] = -1;
      return CartanData(rank, std::move(e));
    }
    case 'D': {
      SCHUB_REQUIRE(rank >= 2, "D_n needs n >= 2");
      std::vector<int32_t> e(rank * rank, 0);
      for (int i = 0; i < rank; ++i) e[i * rank + i] = 2;
      for (int i = 0; i + 1 < rank - 1; ++i) {
        e[i * rank + i + 1] = -1;
        e[(i + 1) * rank + i] = -1;
      }
      if (rank >= 3) {
        e[(rank - 3) * rank + (rank - 1)] = -1;
        e[(rank - 1) * rank + (rank - 3)] = -1;
      }
      return CartanData(rank, std::move(e));
    }
    case 'G': {
      SCHUB_REQUIRE(rank == 2, "G_2 has rank 2");
      return CartanData(2, {2, -1, -3, 2});
    }
    default:
      throw DomainError(std::string("unknown Cartan family '") + family + "'");
  }
}

CartanData CartanData::from_type_string(const std::string& tag) {
  SCHUB_REQUIRE(tag.size() >= 2 && std::isalpha(tag[0]),
                "type tag must look like A3, B2, ...");
  char family = static_cast<char>(std::toupper(tag[0]));
  int rank = 0;
  for (size_t k = 1; k < tag.size(); ++k) {
    SCHUB_REQUIRE(std::isdigit(tag[k]), "bad rank in type tag '" << tag << "'");
    rank = rank * 10 + (tag[k] - '0');
  }
  return builtin(family, rank);
}

CartanData CartanData::from_stream(std::istream& in) {
  int rank = 0;
  SCHUB_REQUIRE(static_cast<bool>(in >> rank), "GCM file: missing rank line");
  SCHUB_REQUIRE(rank >= 1 && rank <= 64, "GCM file: implausible rank " << rank);
  std::vector<int32_t> e(rank * rank);
  for (int i = 0; i < rank * rank; ++i) {
    SCHUB_REQUIRE(static_cast<bool>(in >> e[i]),
                  "GCM file: expected " << rank * rank << " matrix entries");
  }
  return from_matrix(rank, std::move(e));
}

CartanData CartanData::from_file(const std::string& path) {
  std::ifstream in(path);
  SCHUB_REQUIRE(in.good(), "cannot open GCM file '" << path << "'");
  return from_stream(in);
}

Weight CartanData::reflect(int i, const Weight& lambda) const {
  SCHUB_REQUIRE(i >= 0 && i < rank_, "generator index out of range");
  SCHUB_REQUIRE(lambda.rank() == rank_, "weight rank mismatch");
  int64_t pairing = 0;
  for (int j = 0; j < rank_; ++j)
    pairing += static_cast<int64_t>(entry(i, j)) * lambda.coords[j];
  Weight r = lambda;
  r.coords[i] -= static_cast<int32_t>(pairing);
  return r;
}

int CartanData::coxeter_order(int i, int j) const {
  SCHUB_REQUIRE(i != j, "coxeter_order needs distinct generators");
  int p = entry(i, j) * entry(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

}  // namespace schub
