#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/graph.hpp"
#include "unimodal/indpoly.hpp"

namespace unimodal {

// Two-row shape (a, b), a >= b >= 0.
struct Shape {
  unsigned a = 0;
  unsigned b = 0;
  auto operator<=>(const Shape&) const = default;
};

// A symmetric function seen through x = (x1, x2, 0, 0, ...).
class BivariateSymPoly {
 public:
  using Exponent = std::pair<unsigned, unsigned>;

  static BivariateSymPoly one();
  static BivariateSymPoly monomial(unsigned d1, unsigned d2, const BigInt& c = 1);
  // x1^d1 x2^d2 + x1^d2 x2^d1 (so 2 x1^d x2^d when d1 == d2).
  static BivariateSymPoly orbit_sum(unsigned d1, unsigned d2, const BigInt& c = 1);

  BigInt coeff(unsigned d1, unsigned d2) const;
  void add_term(unsigned d1, unsigned d2, const BigInt& c);
  const std::map<Exponent, BigInt>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_symmetric() const;

  BivariateSymPoly operator+(const BivariateSymPoly& o) const;
  BivariateSymPoly operator-(const BivariateSymPoly& o) const;
  BivariateSymPoly operator*(const BivariateSymPoly& o) const;
  BivariateSymPoly scaled(const BigInt& c) const;
  // Throws std::domain_error when some coefficient is not divisible.
  BivariateSymPoly divided_exact(const BigInt& d) const;
  bool operator==(const BivariateSymPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::map<Exponent, BigInt> terms_;  // nonzero entries only
};

class TwoRowSchurExpansion {
 public:
  BigInt coefficient(unsigned a, unsigned b) const;
  void add(unsigned a, unsigned b, const BigInt& c);
  const std::map<Shape, BigInt, std::greater<Shape>>& terms() const { return terms_; }

  bool is_2s_positive() const;
  BivariateSymPoly to_polynomial() const;
  bool operator==(const TwoRowSchurExpansion& o) const { return terms_ == o.terms_; }

  // [[a,b,"coeff"],...] with shapes in descending order.
  std::string to_json() const;

 private:
  std::map<Shape, BigInt, std::greater<Shape>> terms_;  // nonzero entries only
};

// s_(a,b)(x1, x2) = (x1 x2)^b h_{a-b}(x1, x2).
BivariateSymPoly schur_poly(unsigned a, unsigned b);

// Throws std::invalid_argument on asymmetric input.
TwoRowSchurExpansion schur_expand(const BivariateSymPoly& f);
bool is_2s_positive(const BivariateSymPoly& f);
BigInt schur_coefficient(const BivariateSymPoly& f, unsigned a, unsigned b);

BivariateSymPoly product(const BivariateSymPoly& f, const BivariateSymPoly& g);

BivariateSymPoly chromatic_2var(const Graph& g);
BivariateSymPoly chromatic_multicolor_2var(const Graph& g, std::span<const unsigned> alpha);
BivariateSymPoly f_p_2var(const IntPoly& p);
BivariateSymPoly y_g_2var(const Graph& g);

// Homogeneous shadow stored densely: c[i] is the coefficient of
// x1^i x2^(degree-i). Used on the enumeration hot path; every value fits in
// 64 bits because all monomial coefficients are nonnegative and sum to at
// most 2^(number of clan components).
class HomogeneousShadow {
 public:
  static HomogeneousShadow zero_shadow();
  // c[i] is the coefficient of x1^i x2^(c.size()-1-i).
  static HomogeneousShadow from_coeffs(std::vector<std::int64_t> c);

  unsigned degree() const { return degree_; }
  bool is_zero() const { return zero_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  std::int64_t monomial(unsigned i) const { return zero_ || i > degree_ ? 0 : c_[i]; }
  // [s_(a, degree-a)] for a >= degree-a.
  std::int64_t schur(unsigned a) const { return monomial(a) - monomial(a + 1); }
  std::int64_t skk(unsigned k) const { return 2 * k == degree_ ? schur(k) : 0; }
  bool is_2s_positive() const;

  BivariateSymPoly to_polynomial() const;
  TwoRowSchurExpansion to_expansion() const;

  bool operator==(const HomogeneousShadow& o) const;

 private:
  friend class ShadowEvaluator;
  unsigned degree_ = 0;
  bool zero_ = false;
  std::vector<std::int64_t> c_{1};
};

// True iff f + g is 2-s-positive; homogeneous parts of different degrees are
// judged separately.
bool sum_is_2s_positive(const HomogeneousShadow& f, const HomogeneousShadow& g);

// Multicolour shadow of a forest read off the clan component structure
// without building the clan graph.
class ShadowEvaluator {
 public:
  explicit ShadowEvaluator(const Graph& forest);

  HomogeneousShadow evaluate(std::span<const unsigned> alpha);
  void evaluate(std::span<const unsigned> alpha, HomogeneousShadow& out);
  // Cheap test used to filter enumerations.
  bool is_2s_positive(std::span<const unsigned> alpha);

  std::size_t vertex_count() const { return parent_.size(); }

 private:
  std::vector<VertexId> order_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint32_t> size_[2];
  std::vector<std::int64_t> scratch_;
};

}  // namespace unimodal
