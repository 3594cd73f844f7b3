#pragma once

// Shared plumbing for the exhaustive audits: chunked enumeration, packed
// alpha keys, the running alpha-sum of shadows and the injectivity sweep.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/alpha_maps.hpp"
#include "unimodal/indpoly.hpp"
#include "unimodal/parallel.hpp"
#include "unimodal/report.hpp"
#include "unimodal/symfunc2.hpp"

namespace unimodal::detail {

// Two bits per vertex; callers keep values <= 3 and at most 32 vertices.
inline std::uint64_t pack(std::span<const unsigned> a) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < a.size(); ++i) key |= static_cast<std::uint64_t>(a[i] & 3u) << (2 * i);
  return key;
}

inline AlphaMap unpack(std::uint64_t key, std::size_t n) {
  AlphaMap a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<unsigned>((key >> (2 * i)) & 3u);
  return a;
}

inline bool packable(const AlphaMap& a) {
  return a.size() <= 32 && std::all_of(a.vec().begin(), a.vec().end(), [](unsigned x) { return x <= 3; });
}

// Dense running total of homogeneous shadows, indexed by degree.
class ShadowSum {
 public:
  void add(const HomogeneousShadow& s) {
    if (s.is_zero()) return;
    const unsigned d = s.degree();
    if (by_degree_.size() <= d) by_degree_.resize(d + 1);
    auto& row = by_degree_[d];
    if (row.empty()) row.assign(d + 1, 0);
    for (unsigned i = 0; i <= d; ++i) row[i] += s.coeffs()[i];
  }
  void merge(const ShadowSum& o) {
    if (by_degree_.size() < o.by_degree_.size()) by_degree_.resize(o.by_degree_.size());
    for (std::size_t d = 0; d < o.by_degree_.size(); ++d) {
      if (o.by_degree_[d].empty()) continue;
      auto& row = by_degree_[d];
      if (row.empty()) row.assign(d + 1, 0);
      for (std::size_t i = 0; i <= d; ++i) row[i] += o.by_degree_[d][i];
    }
  }
  // [s_(k,k)] of the total.
  std::int64_t skk(unsigned k) const {
    const std::size_t d = 2 * static_cast<std::size_t>(k);
    if (d >= by_degree_.size() || by_degree_[d].empty()) return 0;
    return by_degree_[d][k] - (k + 1 <= d ? by_degree_[d][k + 1] : 0);
  }
  BivariateSymPoly to_polynomial() const {
    BivariateSymPoly f;
    for (std::size_t d = 0; d < by_degree_.size(); ++d)
      for (std::size_t i = 0; i < by_degree_[d].size(); ++i)
        if (by_degree_[d][i] != 0)
          f.add_term(static_cast<unsigned>(i), static_cast<unsigned>(d - i),
                     BigInt(static_cast<long>(by_degree_[d][i])));
    return f;
  }

 private:
  std::vector<std::vector<std::int64_t>> by_degree_;
};

// Prefix split: enough prefixes to keep every worker busy, none when serial.
inline std::vector<std::vector<unsigned>> plan_chunks(const Graph& g, unsigned threads) {
  if (threads <= 1) return {std::vector<unsigned>{}};
  std::size_t depth = 1;
  auto prefixes = feasible_prefixes(g, depth);
  while (prefixes.size() < 8 * static_cast<std::size_t>(threads) && depth < g.vertex_count() / 2)
    prefixes = feasible_prefixes(g, ++depth);
  return prefixes;
}

// Runs one Chunk per prefix. Chunk(ctx) must provide visit(span). Results
// come back in prefix order, which is the canonical enumeration order.
template <class Chunk, class Ctx>
std::vector<Chunk> run_chunks(const Graph& g, unsigned threads, std::size_t max_vertices, const Ctx& ctx) {
  if (g.vertex_count() > max_vertices)
    throw std::length_error("exhaustive audit limited to " + std::to_string(max_vertices) + " vertices");
  threads = resolve_threads(threads);
  const auto prefixes = plan_chunks(g, threads);
  std::vector<Chunk> chunks;
  chunks.reserve(prefixes.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) chunks.emplace_back(ctx);
  parallel_for(prefixes.size(), threads, [&](std::size_t i) {
    Chunk& c = chunks[i];
    for_each_feasible_from(g, prefixes[i], [&c](std::span<const unsigned> a) { c.visit(a); });
  });
  return chunks;
}

// An image key together with the alpha that produced it.
struct ImageRecord {
  std::uint64_t image = 0;
  std::uint64_t source = 0;
  int label = 0;
};

// Reports every image reached from two different sources.
inline void injectivity_sweep(std::vector<ImageRecord> images, std::size_t n, LemmaReport& rep,
                              std::size_t cap) {
  rep.cases += images.size();
  std::stable_sort(images.begin(), images.end(), [](const ImageRecord& a, const ImageRecord& b) {
    return a.image != b.image ? a.image < b.image : a.source < b.source;
  });
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].image != images[i - 1].image || images[i].source == images[i - 1].source) continue;
    rep.fail(unpack(images[i].source, n),
             "image " + unpack(images[i].image, n).to_json() + " (class " +
                 std::to_string(images[i].label) + ") is also the image of " +
                 unpack(images[i - 1].source, n).to_json() + " (class " +
                 std::to_string(images[i - 1].label) + ")",
             cap);
  }
}


// Checks on the accumulated alpha-sum Y: nonnegative [s_(k,k)] for
// 1 <= k <= top, equality with I(x1) I(x2), and [s_(k,k)] Y against the
// log-concavity defect of the independence sequence.
inline void alpha_sum_reports(const Graph& g, const ShadowSum& y, std::uint64_t visited, unsigned top,
                              const std::string& prefix, std::size_t m, std::size_t n,
                              std::vector<LemmaReport>& out) {
  LemmaReport skk{prefix + "y-skk", m, n};
  LemmaReport stanley{prefix + "stanley-identity", m, n};
  LemmaReport defects{prefix + "skk-identity", m, n};
  const IntPoly ip = indpoly_tree(g);
  const auto d = log_concavity_defects(ip);
  for (unsigned k = 1; k <= top; ++k) {
    ++skk.cases;
    ++defects.cases;
    const std::int64_t c = y.skk(k);
    if (c < 0) skk.fail(AlphaMap{}, "[s_(" + std::to_string(k) + "," + std::to_string(k) + ")] Y = " + std::to_string(c));
    const BigInt expect = k < d.size() ? d[k] : BigInt(0);
    if (BigInt(static_cast<long>(c)) != expect)
      defects.fail(AlphaMap{}, "k = " + std::to_string(k) + ": alpha-sum gives " + std::to_string(c) +
                                   ", i_k^2 - i_(k-1) i_(k+1) = " + to_decimal(expect));
  }
  stanley.cases = visited;
  if (!(y.to_polynomial() == f_p_2var(ip)))
    stanley.fail(AlphaMap{}, "sum of shadows over all alpha differs from I(x1) I(x2)");
  out.push_back(std::move(skk));
  out.push_back(std::move(stanley));
  out.push_back(std::move(defects));
}

}  // namespace unimodal::detail
