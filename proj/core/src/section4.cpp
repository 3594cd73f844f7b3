// Exhaustive audit of the N -> M pairing on T(3,m,n).

#include <array>
#include <chrono>
#include <string>

#include "enum_driver.hpp"
#include "unimodal/proof_check.hpp"

namespace unimodal {

namespace {

struct TreeCtx {
  const Graph* g = nullptr;
  const TreeLayout* layout = nullptr;
  std::size_t cap = kDefaultViolationCap;
};

std::string cls_tag(int i) { return "class " + std::to_string(i); }

struct TreeChunk {
  const TreeCtx* ctx;
  ShadowEvaluator ev;
  HomogeneousShadow sa, sb;

  std::uint64_t visited = 0;
  std::array<std::uint64_t, kNClasses + 1> n_sizes{};
  LemmaReport partition, defined, in_class, positive, pairing, disjoint, vanishing;
  std::vector<detail::ImageRecord> images;
  detail::ShadowSum y;

  explicit TreeChunk(const TreeCtx& c) : ctx(&c), ev(*c.g) {}

  void visit(std::span<const unsigned> a) {
    ++visited;
    ev.evaluate(a, sa);
    y.add(sa);
    if (sa.is_2s_positive()) return;

    const std::size_t cap = ctx->cap;
    TreeView v = make_view(*ctx->layout, AlphaMap(std::vector<unsigned>(a.begin(), a.end())), false);
    const auto labels = N_labels(v);
    ++partition.cases;
    if (labels.size() != 1) {
      std::string why = labels.empty() ? "in no class" : "in classes";
      for (int l : labels) why += " " + std::to_string(l);
      partition.fail(v.alpha, why, cap);
      if (labels.empty()) return;
    }
    for (int l : labels) ++n_sizes[l];
    const int label = labels.front();

    if (label == kNClasses) {
      ++vanishing.cases;
      const unsigned keep = static_cast<unsigned>(ctx->layout->m + ctx->layout->n + 5);
      for (unsigned k = 0; 2 * k <= sa.degree(); ++k)
        if (k != keep && sa.skk(k) != 0) {
          vanishing.fail(v.alpha, "[s_(" + std::to_string(k) + "," + std::to_string(k) + ")] = " +
                                      std::to_string(sa.skk(k)), cap);
          break;
        }
      return;
    }

    ++defined.cases;
    AlphaMap b;
    try {
      b = apply_psi(label, v);
    } catch (const std::exception& e) {
      defined.fail(v.alpha, cls_tag(label) + ": " + e.what(), cap);
      return;
    }
    ev.evaluate(b.values(), sb);
    const bool b_pos = sb.is_2s_positive();
    const TreeView w = make_view(*ctx->layout, b, b_pos);

    ++positive.cases;
    if (!b_pos) positive.fail(v.alpha, cls_tag(label) + ": image " + b.to_json() + " is not 2-s-positive", cap);
    ++in_class.cases;
    if (!in_M_class(label, w)) in_class.fail(v.alpha, cls_tag(label) + ": image " + b.to_json() + " misses its target class", cap);
    ++disjoint.cases;
    const auto ml = M_labels(w);
    if (ml.size() > 1) {
      std::string why = "image " + b.to_json() + " lies in target classes";
      for (int l : ml) why += " " + std::to_string(l);
      disjoint.fail(v.alpha, why, cap);
    }
    ++pairing.cases;
    if (!sum_is_2s_positive(sa, sb))
      pairing.fail(v.alpha, cls_tag(label) + ": shadow sum with image " + b.to_json() + " is not 2-s-positive", cap);

    if (detail::packable(b)) images.push_back({detail::pack(b.values()), detail::pack(a), label});
  }
};

}  // namespace

std::vector<LemmaReport> verify_section4(std::size_t m, std::size_t n, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = build_t3mn(m, n);
  const TreeLayout layout = tree_layout(m, n, false);
  const TreeCtx ctx{&g, &layout, opt.violation_cap};
  auto chunks = detail::run_chunks<TreeChunk>(g, opt.threads, opt.max_vertices, ctx);

  const std::string p = "tree.";
  LemmaReport partition{p + "partition", m, n}, defined{p + "map-defined", m, n},
      in_class{p + "image-in-class", m, n}, positive{p + "image-positive", m, n},
      pairing{p + "pairing", m, n}, injective{p + "injective", m, n}, disjoint{p + "class-disjoint", m, n},
      vanishing{p + "top-class-vanishing", m, n};
  std::array<std::uint64_t, kNClasses + 1> sizes{};
  std::vector<detail::ImageRecord> images;
  detail::ShadowSum y;
  std::uint64_t visited = 0;
  const std::size_t cap = opt.violation_cap;
  for (const auto& c : chunks) {
    partition.merge(c.partition, cap);
    defined.merge(c.defined, cap);
    in_class.merge(c.in_class, cap);
    positive.merge(c.positive, cap);
    pairing.merge(c.pairing, cap);
    disjoint.merge(c.disjoint, cap);
    vanishing.merge(c.vanishing, cap);
    for (int i = 1; i <= kNClasses; ++i) sizes[i] += c.n_sizes[i];
    images.insert(images.end(), c.images.begin(), c.images.end());
    y.merge(c.y);
    visited += c.visited;
  }
  detail::injectivity_sweep(std::move(images), g.vertex_count(), injective, cap);

  std::vector<LemmaReport> out{partition, defined, in_class, positive, pairing, injective, disjoint, vanishing};
  detail::alpha_sum_reports(g, y, visited, static_cast<unsigned>(m + n + 4), p, m, n, out);
  // Per-class sizes, no claims attached.
  for (int i = 1; i <= kNClasses; ++i) {
    LemmaReport r{p + "class-" + (i < 10 ? "0" : "") + std::to_string(i), m, n};
    r.cases = sizes[i];
    out.push_back(std::move(r));
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (auto& r : out) r.elapsed_ms = ms;
  return out;
}

}  // namespace unimodal
