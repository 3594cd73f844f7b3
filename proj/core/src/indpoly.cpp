#include "unimodal/indpoly.hpp"

#include <cstdint>
#include <stdexcept>

#include <json.hpp>

#include "unimodal/parallel.hpp"

namespace unimodal {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long c) { return IntPoly(std::vector<BigInt>{BigInt(c)}); }

IntPoly IntPoly::monomial(std::size_t degree, long c) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(to_decimal(c));
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_decimal(coeffs_[k]);
    if (k == 1) s += "t";
    if (k > 1) s += "t^" + std::to_string(k);
  }
  return s;
}

namespace {

struct SubsetCounter {
  std::vector<std::uint64_t> nbmask;
  std::vector<std::uint64_t> counts;
  std::size_t n = 0;

  void run(std::size_t v, std::size_t size, std::uint64_t blocked) {
    if (v == n) {
      ++counts[size];
      return;
    }
    run(v + 1, size, blocked);
    if (!(blocked >> v & 1)) run(v + 1, size + 1, blocked | nbmask[v]);
  }
};

}  // namespace

IntPoly indpoly_bruteforce(const Graph& g) {
  if (g.vertex_count() > kBruteForceMaxVertices)
    throw std::length_error("brute-force independence polynomial limited to " +
                            std::to_string(kBruteForceMaxVertices) + " vertices");
  SubsetCounter c;
  c.n = g.vertex_count();
  c.nbmask.assign(c.n, 0);
  c.counts.assign(c.n + 1, 0);
  for (VertexId v = 0; v < c.n; ++v)
    for (VertexId u : g.neighbors(v)) c.nbmask[v] |= std::uint64_t{1} << u;
  c.run(0, 0, 0);
  std::vector<BigInt> coeffs;
  for (auto x : c.counts) coeffs.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(coeffs));
}

IntPoly indpoly_tree(const Graph& g) {
  if (!g.is_forest()) throw std::invalid_argument("indpoly_tree requires a forest");
  const auto forest = root_forest(g);
  const std::size_t n = g.vertex_count();
  std::vector<IntPoly> excl(n, IntPoly::constant(1));
  std::vector<IntPoly> incl(n, IntPoly::monomial(1));
  IntPoly total = IntPoly::constant(1);
  for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
    VertexId v = *it;
    VertexId p = forest.parent[v];
    if (p == v) {
      total = total * (excl[v] + incl[v]);
    } else {
      excl[p] = excl[p] * (excl[v] + incl[v]);
      incl[p] = incl[p] * excl[v];
    }
  }
  return total;
}

std::size_t tail_start(std::size_t t) { return t == 0 ? 0 : (2 * t + 1) / 3; }

SequenceReport analyze(const IntPoly& p) {
  const auto& c = p.coeffs();
  for (const auto& x : c)
    if (x < 0) throw std::invalid_argument("analyze requires nonnegative coefficients");
  SequenceReport r;
  if (c.empty()) return r;
  const std::size_t deg = c.size() - 1;

  std::size_t i = 0;
  while (i < deg && c[i] <= c[i + 1]) ++i;
  while (i < deg && c[i] >= c[i + 1]) ++i;
  r.unimodal = (i == deg);

  for (std::size_t k = 1; k < deg; ++k)
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) r.breaks.push_back(k);
  r.log_concave = r.breaks.empty();

  std::size_t best = 0;
  for (std::size_t k = 1; k <= deg; ++k)
    if (c[k] > c[best]) best = k;
  r.mode_lo = best;
  r.mode_hi = best;
  for (std::size_t k = best; k <= deg; ++k)
    if (c[k] == c[best]) r.mode_hi = k;

  for (std::size_t k = tail_start(deg); k < deg; ++k)
    if (c[k] < c[k + 1]) r.tail_ok = false;
  return r;
}

std::vector<BigInt> log_concavity_defects(const IntPoly& p) {
  std::vector<BigInt> out;
  if (p.is_zero()) return out;
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    BigInt prev = k ? p[k - 1] : BigInt(0);
    out.push_back(p[k] * p[k] - prev * p[k + 1]);
  }
  return out;
}

const char* family_id(Family f) {
  switch (f) {
    case Family::T3mn: return "t3mn";
    case Family::T3mnStar: return "t3mn_star";
    case Family::Spider2: return "spider2";
  }
  return "?";
}

Graph build_family(Family f, std::size_t m, std::size_t n) {
  switch (f) {
    case Family::T3mn: return build_t3mn(m, n);
    case Family::T3mnStar: return build_t3mn_star(m, n);
    case Family::Spider2: return build_spider_2(n);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<ScanRow> scan_cells(const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                Family family, unsigned threads) {
  std::vector<ScanRow> rows(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    auto [m, n] = cells[i];
    ScanRow row{family, m, n, indpoly_tree(build_family(family, m, n)), {}};
    row.report = analyze(row.poly);
    rows[i] = std::move(row);
  });
  return rows;
}

std::vector<ScanRow> scan_families(std::size_t m_lo, std::size_t m_hi, std::size_t n_lo,
                                   std::size_t n_hi, Family family, unsigned threads) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t m = m_lo; m <= m_hi; ++m)
    for (std::size_t n = n_lo; n <= n_hi; ++n) cells.emplace_back(m, n);
  return scan_cells(cells, family, threads);
}

std::string scan_row_json(const ScanRow& row) {
  nlohmann::ordered_json j;
  j["family"] = family_id(row.family);
  j["m"] = row.m;
  j["n"] = row.n;
  j["coeffs"] = row.poly.coeff_strings();
  j["unimodal"] = row.report.unimodal;
  j["log_concave"] = row.report.log_concave;
  j["breaks"] = row.report.breaks;
  j["tail_ok"] = row.report.tail_ok;
  return j.dump();
}

}  // namespace unimodal
