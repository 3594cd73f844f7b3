#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/graph.hpp"

namespace unimodal {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(long c);
  static IntPoly monomial(std::size_t degree, long c = 1);

  // Degree of the zero polynomial is reported as 0 with is_zero() true.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly shifted(std::size_t k) const;  // multiply by t^k
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct SequenceReport {
  bool unimodal = true;
  bool log_concave = true;
  std::vector<std::size_t> breaks;
  std::size_t mode_lo = 0;
  std::size_t mode_hi = 0;
  bool tail_ok = true;
};

inline constexpr std::size_t kBruteForceMaxVertices = 30;

IntPoly indpoly_bruteforce(const Graph& g);
IntPoly indpoly_tree(const Graph& g);

SequenceReport analyze(const IntPoly& p);

// First index of the decreasing tail c_{ceil((2t-1)/3)} >= ... >= c_t.
std::size_t tail_start(std::size_t t);

// i_k^2 - i_{k-1} i_{k+1}, for k = 0..deg (out of range terms are 0).
std::vector<BigInt> log_concavity_defects(const IntPoly& p);

enum class Family { T3mn, T3mnStar, Spider2 };

const char* family_id(Family f);  // "t3mn", "t3mn_star", "spider2"
Graph build_family(Family f, std::size_t m, std::size_t n);

struct ScanRow {
  Family family = Family::T3mn;
  std::size_t m = 0;
  std::size_t n = 0;
  IntPoly poly;
  SequenceReport report;
};

// Rows in (m, n) ascending order. threads = 0 picks the default.
std::vector<ScanRow> scan_families(std::size_t m_lo, std::size_t m_hi, std::size_t n_lo,
                                   std::size_t n_hi, Family family, unsigned threads = 0);
std::vector<ScanRow> scan_cells(const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                Family family, unsigned threads = 0);

std::string scan_row_json(const ScanRow& row);

}  // namespace unimodal
