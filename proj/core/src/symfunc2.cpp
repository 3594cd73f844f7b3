#include "unimodal/symfunc2.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace unimodal {

BivariateSymPoly BivariateSymPoly::one() { return monomial(0, 0, 1); }

BivariateSymPoly BivariateSymPoly::monomial(unsigned d1, unsigned d2, const BigInt& c) {
  BivariateSymPoly f;
  f.add_term(d1, d2, c);
  return f;
}

BivariateSymPoly BivariateSymPoly::orbit_sum(unsigned d1, unsigned d2, const BigInt& c) {
  BivariateSymPoly f;
  f.add_term(d1, d2, c);
  f.add_term(d2, d1, c);
  return f;
}

BigInt BivariateSymPoly::coeff(unsigned d1, unsigned d2) const {
  auto it = terms_.find({d1, d2});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariateSymPoly::add_term(unsigned d1, unsigned d2, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({d1, d2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BivariateSymPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(e.second, e.first) != c) return false;
  return true;
}

BivariateSymPoly BivariateSymPoly::operator+(const BivariateSymPoly& o) const {
  BivariateSymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivariateSymPoly BivariateSymPoly::operator-(const BivariateSymPoly& o) const {
  BivariateSymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BivariateSymPoly BivariateSymPoly::operator*(const BivariateSymPoly& o) const {
  BivariateSymPoly r;
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : o.terms_) r.add_term(e.first + f.first, e.second + f.second, c * d);
  return r;
}

BivariateSymPoly BivariateSymPoly::scaled(const BigInt& c) const {
  BivariateSymPoly r;
  for (const auto& [e, x] : terms_) r.add_term(e.first, e.second, x * c);
  return r;
}

BivariateSymPoly BivariateSymPoly::divided_exact(const BigInt& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  BivariateSymPoly r;
  for (const auto& [e, x] : terms_) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("inexact division of a two-variable shadow");
    r.add_term(e.first, e.second, x / d);
  }
  return r;
}

std::string BivariateSymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_decimal(it->second) + "*x1^" + std::to_string(it->first.first) + "*x2^" +
         std::to_string(it->first.second);
  }
  return s;
}

BigInt TwoRowSchurExpansion::coefficient(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TwoRowSchurExpansion::add(unsigned a, unsigned b, const BigInt& c) {
  if (a < b) throw std::invalid_argument("two-row shape needs a >= b");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TwoRowSchurExpansion::is_2s_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

BivariateSymPoly TwoRowSchurExpansion::to_polynomial() const {
  BivariateSymPoly f;
  for (const auto& [shape, c] : terms_) f = f + schur_poly(shape.a, shape.b).scaled(c);
  return f;
}

std::string TwoRowSchurExpansion::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [shape, c] : terms_) arr.push_back({shape.a, shape.b, to_decimal(c)});
  return arr.dump();
}

BivariateSymPoly schur_poly(unsigned a, unsigned b) {
  if (a < b) throw std::invalid_argument("two-row shape needs a >= b");
  BivariateSymPoly f;
  for (unsigned i = b; i <= a; ++i) f.add_term(i, a + b - i, 1);
  return f;
}

TwoRowSchurExpansion schur_expand(const BivariateSymPoly& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("schur_expand needs a symmetric polynomial");
  // Bialternant: [s_(a,b)] f = [x1^(a+1) x2^b] f * (x1 - x2).
  BivariateSymPoly alt = f * (BivariateSymPoly::monomial(1, 0) - BivariateSymPoly::monomial(0, 1));
  TwoRowSchurExpansion out;
  for (const auto& [e, c] : alt.terms())
    if (e.first > e.second) out.add(e.first - 1, e.second, c);
  return out;
}

bool is_2s_positive(const BivariateSymPoly& f) { return schur_expand(f).is_2s_positive(); }

BigInt schur_coefficient(const BivariateSymPoly& f, unsigned a, unsigned b) {
  // Same extraction as schur_expand, restricted to one shape.
  return f.coeff(a, b) - (b == 0 ? BigInt(0) : f.coeff(a + 1, b - 1));
}

BivariateSymPoly product(const BivariateSymPoly& f, const BivariateSymPoly& g) { return f * g; }

BivariateSymPoly chromatic_2var(const Graph& g) {
  BivariateSymPoly f = BivariateSymPoly::one();
  for (const auto& comp : connected_components(g)) {
    auto bp = bipartition(g, comp);
    if (!bp) return {};
    f = f * BivariateSymPoly::orbit_sum(static_cast<unsigned>(bp->p), static_cast<unsigned>(bp->q));
  }
  return f;
}

BivariateSymPoly chromatic_multicolor_2var(const Graph& g, std::span<const unsigned> alpha) {
  BigInt denom = 1;
  for (unsigned a : alpha) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), a);
    denom *= fact;
  }
  return chromatic_2var(clan_graph(g, alpha)).divided_exact(denom);
}

BivariateSymPoly f_p_2var(const IntPoly& p) {
  if (p[0] != 1) throw std::invalid_argument("f_p_2var needs constant term 1");
  BivariateSymPoly f;
  const auto& c = p.coeffs();
  for (unsigned i = 0; i < c.size(); ++i)
    for (unsigned j = 0; j < c.size(); ++j) f.add_term(i, j, c[i] * c[j]);
  return f;
}

BivariateSymPoly y_g_2var(const Graph& g) {
  return f_p_2var(g.is_forest() ? indpoly_tree(g) : indpoly_bruteforce(g));
}

HomogeneousShadow HomogeneousShadow::zero_shadow() {
  HomogeneousShadow s;
  s.zero_ = true;
  return s;
}

HomogeneousShadow HomogeneousShadow::from_coeffs(std::vector<std::int64_t> c) {
  if (c.empty()) throw std::invalid_argument("shadow needs at least one coefficient");
  HomogeneousShadow s;
  s.degree_ = static_cast<unsigned>(c.size() - 1);
  s.c_ = std::move(c);
  return s;
}

bool HomogeneousShadow::is_2s_positive() const {
  if (zero_) return true;
  for (unsigned a = (degree_ + 1) / 2; a <= degree_; ++a)
    if (c_[a] < (a < degree_ ? c_[a + 1] : 0)) return false;
  return true;
}

BivariateSymPoly HomogeneousShadow::to_polynomial() const {
  BivariateSymPoly f;
  if (zero_) return f;
  for (unsigned i = 0; i <= degree_; ++i) f.add_term(i, degree_ - i, BigInt(static_cast<long>(c_[i])));
  return f;
}

TwoRowSchurExpansion HomogeneousShadow::to_expansion() const {
  TwoRowSchurExpansion e;
  if (zero_) return e;
  for (unsigned a = (degree_ + 1) / 2; a <= degree_; ++a)
    e.add(a, degree_ - a, BigInt(static_cast<long>(schur(a))));
  return e;
}

bool HomogeneousShadow::operator==(const HomogeneousShadow& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return degree_ == o.degree_ && c_ == o.c_;
}

bool sum_is_2s_positive(const HomogeneousShadow& f, const HomogeneousShadow& g) {
  if (f.is_zero()) return g.is_2s_positive();
  if (g.is_zero()) return f.is_2s_positive();
  if (f.degree() != g.degree()) return f.is_2s_positive() && g.is_2s_positive();
  const unsigned d = f.degree();
  for (unsigned a = (d + 1) / 2; a <= d; ++a)
    if (f.schur(a) + g.schur(a) < 0) return false;
  return true;
}

ShadowEvaluator::ShadowEvaluator(const Graph& forest) {
  if (!forest.is_forest()) throw std::invalid_argument("ShadowEvaluator needs a forest");
  auto rf = root_forest(forest);
  order_ = std::move(rf.order);
  parent_ = std::move(rf.parent);
  const std::size_t n = parent_.size();
  comp_.assign(n, 0);
  side_.assign(n, 0);
  size_[0].reserve(n);
  size_[1].reserve(n);
  scratch_.reserve(2 * n + 2);
}

void ShadowEvaluator::evaluate(std::span<const unsigned> alpha, HomogeneousShadow& out) {
  if (alpha.size() != parent_.size()) throw std::invalid_argument("alpha length mismatch");
  out.zero_ = false;
  unsigned total = 0;
  for (unsigned a : alpha) total += a;
  out.degree_ = total;

  size_[0].clear();
  size_[1].clear();
  unsigned blocks = 0;  // K2 blocks coming from alpha(v) = 2
  for (VertexId v : order_) {
    const unsigned a = alpha[v];
    const VertexId p = parent_[v];
    const unsigned ap = p == v ? 0 : alpha[p];
    if (a >= 3 || (a >= 1 && ap >= 1 && a + ap >= 3)) {
      out.zero_ = true;
      return;
    }
    if (a == 2) {
      ++blocks;
    } else if (a == 1) {
      if (ap == 1) {
        comp_[v] = comp_[p];
        side_[v] = side_[p] ^ 1;
      } else {
        comp_[v] = static_cast<std::uint32_t>(size_[0].size());
        side_[v] = 0;
        size_[0].push_back(0);
        size_[1].push_back(0);
      }
      ++size_[side_[v]][comp_[v]];
    }
  }
  const std::size_t comps = size_[0].size();
  if (comps > 62) throw std::overflow_error("too many clan components for 64-bit shadow");

  // Build the product of x1^p x2^q + x1^q x2^p over components, then shift by
  // (x1 x2)^blocks.
  auto& c = out.c_;
  c.assign(total + 1, 0);
  c[0] = 1;
  unsigned deg = 0;
  for (std::size_t i = 0; i < comps; ++i) {
    const unsigned p = size_[0][i], q = size_[1][i];
    scratch_.assign(deg + p + q + 1, 0);
    for (unsigned j = 0; j <= deg; ++j) {
      if (!c[j]) continue;
      scratch_[j + p] += c[j];
      scratch_[j + q] += c[j];
    }
    deg += p + q;
    std::copy(scratch_.begin(), scratch_.end(), c.begin());
  }
  if (blocks) {
    for (unsigned j = deg + 1; j-- > 0;) {
      c[j + blocks] = c[j];
      c[j] = 0;
    }
  }
}

HomogeneousShadow ShadowEvaluator::evaluate(std::span<const unsigned> alpha) {
  HomogeneousShadow s;
  evaluate(alpha, s);
  return s;
}

bool ShadowEvaluator::is_2s_positive(std::span<const unsigned> alpha) {
  HomogeneousShadow s;
  evaluate(alpha, s);
  return s.is_2s_positive();
}

}  // namespace unimodal
