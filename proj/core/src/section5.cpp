// Exhaustive audit of the pairing on the extended tree: T(3,m,n) plus a
// pendant path x - y hung off v13'.

#include <array>
#include <chrono>
#include <string>

#include "enum_driver.hpp"
#include "unimodal/proof_check.hpp"

namespace unimodal {

StarView make_star_view(const TreeLayout& layout, const AlphaMap& alpha, bool positive,
                        bool tree_positive) {
  if (!layout.star || alpha.size() != layout.vertex_count)
    throw std::invalid_argument("make_star_view: layout or size mismatch");
  StarView s;
  std::vector<unsigned> t(alpha.vec().begin(), alpha.vec().begin() + layout.tree_vertices);
  s.tree = make_view(layout, AlphaMap(std::move(t)), tree_positive);
  s.ax = alpha[layout.x];
  s.ay = alpha[layout.y];
  s.positive = positive;
  s.tree_in_N30 = in_N_class(kNClasses, s.tree);
  return s;
}

bool in_Nprime_class(int i, const StarView& v) {
  if (v.positive) return false;
  const TreeLayout& L = *v.tree.layout;
  const unsigned light = static_cast<unsigned>(2 * L.m + 2 * L.n + 7);
  switch (i) {
    case 1: return v.ax != 1 && !v.tree_in_N30;
    case 2: return v.ax == 1 && v.ay == 1 && !v.tree_in_N30;
    case 3: return v.ax == 1 && v.ay == 0 && v.tree.sum <= light;
    case 4: return v.tree_in_N30 || (v.ax == 1 && v.ay == 0 && v.tree.sum >= light + 1);
    default: throw std::out_of_range("in_Nprime_class: class index out of range");
  }
}

bool in_Mprime_class(int i, const StarView& v) {
  if (!v.positive) return false;
  switch (i) {
    case 1: return v.ax != 1;
    case 2: return v.ax == 1 && v.ay == 1;
    case 3: return v.ax == 1 && v.ay == 0;
    default: throw std::out_of_range("in_Mprime_class: class index out of range");
  }
}

namespace {

struct StarCtx {
  const Graph* g = nullptr;
  const Graph* tree = nullptr;
  const TreeLayout* layout = nullptr;
  std::size_t cap = kDefaultViolationCap;
};

HomogeneousShadow times(const HomogeneousShadow& s, const std::vector<std::int64_t>& f) {
  if (s.is_zero()) return HomogeneousShadow::zero_shadow();
  std::vector<std::int64_t> c(s.coeffs().size() + f.size() - 1, 0);
  for (std::size_t i = 0; i < s.coeffs().size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) c[i + j] += s.coeffs()[i] * f[j];
  return HomogeneousShadow::from_coeffs(std::move(c));
}

const std::vector<std::int64_t> kOne{1}, kLinear{1, 1}, kSquare{0, 1, 0}, kTwoSquare{0, 2, 0};

std::string tag(int i) { return "class " + std::to_string(i); }

struct StarChunk {
  const StarCtx* ctx;
  ShadowEvaluator ev, tev;
  HomogeneousShadow sa, st, sg, sb;

  std::uint64_t visited = 0;
  std::array<std::uint64_t, 5> sizes{};
  LemmaReport partition, defined, gamma, in_class, positive, pairing, disjoint, vanishing, preserved;
  std::array<LemmaReport, 4> path;
  std::vector<detail::ImageRecord> images;
  detail::ShadowSum y;

  explicit StarChunk(const StarCtx& c) : ctx(&c), ev(*c.g), tev(*c.tree) {}

  void check_path(std::span<const unsigned> a) {
    const TreeLayout& L = *ctx->layout;
    const unsigned ax = a[L.x], ay = a[L.y], ap = a[L.v13p()];
    const AlphaMap alpha(std::vector<unsigned>(a.begin(), a.end()));
    auto expect = [&](int which, const std::vector<std::int64_t>& f) {
      ++path[which].cases;
      if (!(sa == times(st, f))) path[which].fail(alpha, "shadow does not factor through the pendant path", ctx->cap);
    };
    if (ax == 0) expect(0, ay == 0 ? kOne : ay == 1 ? kLinear : kSquare);
    else if (ax == 2 && !sa.is_zero()) expect(1, kSquare);
    else if (ax == 1 && ay == 1 && ap == 1) expect(2, kSquare);
    else if (ax == 1 && ay == 1 && ap == 0) expect(3, kTwoSquare);
  }

  void visit(std::span<const unsigned> a) {
    ++visited;
    const TreeLayout& L = *ctx->layout;
    const std::size_t cap = ctx->cap;
    ev.evaluate(a, sa);
    tev.evaluate(a.first(L.tree_vertices), st);
    y.add(sa);
    check_path(a);
    if (sa.is_2s_positive()) return;

    const AlphaMap alpha(std::vector<unsigned>(a.begin(), a.end()));
    const StarView v = make_star_view(L, alpha, false, st.is_2s_positive());
    std::vector<int> labels;
    for (int i = 1; i <= 4; ++i)
      if (in_Nprime_class(i, v)) labels.push_back(i);
    ++partition.cases;
    if (labels.size() != 1) {
      std::string why = labels.empty() ? "in no class" : "in classes";
      for (int l : labels) why += " " + std::to_string(l);
      partition.fail(alpha, why, cap);
      if (labels.empty()) return;
    }
    for (int l : labels) ++sizes[l];
    const int label = labels.front();

    if (label == 4) {
      ++vanishing.cases;
      const unsigned top = static_cast<unsigned>(L.m + L.n + 4);
      for (unsigned k = 0; k <= top; ++k)
        if (sa.skk(k) != 0) {
          vanishing.fail(alpha, "[s_(" + std::to_string(k) + "," + std::to_string(k) + ")] = " +
                                    std::to_string(sa.skk(k)), cap);
          break;
        }
      return;
    }

    // The tree part the inner map is applied to.
    TreeView source = v.tree;
    if (label == 3) {
      AlphaMap g = v.tree.alpha;
      g[L.v13p()] = 0;
      tev.evaluate(g.values(), sg);
      source = make_view(L, std::move(g), sg.is_2s_positive());
      ++gamma.cases;
      if (source.positive) gamma.fail(alpha, "clearing v13' gives a 2-s-positive map", cap);
      else if (in_N_class(kNClasses, source)) gamma.fail(alpha, "clearing v13' lands in the top class", cap);
      else if (in_N28_bar(source)) gamma.fail(alpha, "clearing v13' lands in the exceptional part of class 28", cap);
    }

    ++defined.cases;
    const auto inner = N_labels(source);
    if (source.positive || inner.size() != 1 || inner.front() == kNClasses) {
      defined.fail(alpha, tag(label) + ": tree part has no unique pairable class", cap);
      return;
    }
    AlphaMap mu;
    try {
      mu = apply_psi(inner.front(), source);
    } catch (const std::exception& e) {
      defined.fail(alpha, tag(label) + " via " + tag(inner.front()) + ": " + e.what(), cap);
      return;
    }
    std::vector<unsigned> bv = mu.vec();
    if (label == 3) bv[L.v13p()] = alpha[L.v13p()];
    bv.push_back(v.ax);
    bv.push_back(v.ay);
    const AlphaMap b(std::move(bv));

    ev.evaluate(b.values(), sb);
    const bool b_pos = sb.is_2s_positive();
    const std::string what = tag(label) + " via " + tag(inner.front()) + ": image " + b.to_json();
    ++positive.cases;
    if (!b_pos) positive.fail(alpha, what + " is not 2-s-positive", cap);
    ++preserved.cases;
    if (b[L.x] != alpha[L.x] || b[L.y] != alpha[L.y] || b[L.v13p()] != alpha[L.v13p()])
      preserved.fail(alpha, what + " moves x, y or v13'", cap);
    const StarView w = make_star_view(L, b, b_pos, true);
    ++in_class.cases;
    if (!in_Mprime_class(label, w)) in_class.fail(alpha, what + " misses its target class", cap);
    ++disjoint.cases;
    int hits = 0;
    for (int i = 1; i <= 3; ++i) hits += in_Mprime_class(i, w);
    if (hits > 1) disjoint.fail(alpha, what + " lies in several target classes", cap);
    ++pairing.cases;
    if (!sum_is_2s_positive(sa, sb)) pairing.fail(alpha, what + ": shadow sum is not 2-s-positive", cap);
    if (detail::packable(b)) images.push_back({detail::pack(b.values()), detail::pack(a), label});
  }
};

// Vertex-level facts about the inner maps, read on T(3,m,n) itself.
struct InnerChunk {
  const StarCtx* ctx;
  ShadowEvaluator tev;
  HomogeneousShadow st;
  LemmaReport keeps_tail, monotone;

  explicit InnerChunk(const StarCtx& c) : ctx(&c), tev(*c.tree) {}

  void visit(std::span<const unsigned> a) {
    tev.evaluate(a, st);
    if (st.is_2s_positive()) return;
    const TreeLayout& L = *ctx->layout;
    const TreeView v = make_view(L, AlphaMap(std::vector<unsigned>(a.begin(), a.end())), false);
    const auto labels = N_labels(v);
    if (labels.size() != 1 || labels.front() == kNClasses) return;
    AlphaMap b;
    try {
      b = apply_psi(labels.front(), v);
    } catch (const std::exception&) {
      return;  // counted by the tree audit
    }
    const std::string what = tag(labels.front()) + ": image " + b.to_json();
    ++keeps_tail.cases;
    if (b[L.v13p()] != v.alpha[L.v13p()]) keeps_tail.fail(v.alpha, what + " changes v13'", ctx->cap);
    if (in_N28_bar(v)) return;
    ++monotone.cases;
    if (b[L.v13()] > v.alpha[L.v13()])
      monotone.fail(v.alpha, what + " raises v13 from " + std::to_string(v.alpha[L.v13()]) + " to " +
                                 std::to_string(b[L.v13()]), ctx->cap);
  }
};

}  // namespace

std::vector<LemmaReport> verify_section5(std::size_t m, std::size_t n, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = build_t3mn_star(m, n);
  const Graph tree = build_t3mn(m, n);
  const TreeLayout layout = tree_layout(m, n, true);
  const StarCtx ctx{&g, &tree, &layout, opt.violation_cap};
  const std::size_t cap = opt.violation_cap;

  auto chunks = detail::run_chunks<StarChunk>(g, opt.threads, opt.max_vertices, ctx);
  auto inner = detail::run_chunks<InnerChunk>(tree, opt.threads, opt.max_vertices, ctx);

  const std::string p = "star.";
  LemmaReport partition(p + "partition", m, n), defined(p + "map-defined", m, n),
      gamma(p + "cleared-tail-domain", m, n), in_class(p + "image-in-class", m, n),
      positive(p + "image-positive", m, n), pairing(p + "pairing", m, n), injective(p + "injective", m, n),
      disjoint(p + "class-disjoint", m, n), vanishing(p + "top-class-vanishing", m, n),
      preserved(p + "keeps-x-y-v13p", m, n), keeps_tail(p + "inner-keeps-v13p", m, n),
      monotone(p + "inner-v13-monotone", m, n);
  const std::array<const char*, 4> path_names{"path-append-zero", "path-append-two", "path-append-pair",
                                              "path-append-open"};
  std::array<LemmaReport, 4> path;
  for (int i = 0; i < 4; ++i) path[i] = LemmaReport(p + path_names[i], m, n);
  std::array<std::uint64_t, 5> sizes{};
  std::vector<detail::ImageRecord> images;
  detail::ShadowSum y;
  std::uint64_t visited = 0;
  for (const auto& c : chunks) {
    partition.merge(c.partition, cap);
    defined.merge(c.defined, cap);
    gamma.merge(c.gamma, cap);
    in_class.merge(c.in_class, cap);
    positive.merge(c.positive, cap);
    pairing.merge(c.pairing, cap);
    disjoint.merge(c.disjoint, cap);
    vanishing.merge(c.vanishing, cap);
    preserved.merge(c.preserved, cap);
    for (int i = 0; i < 4; ++i) path[i].merge(c.path[i], cap);
    for (int i = 1; i <= 4; ++i) sizes[i] += c.sizes[i];
    images.insert(images.end(), c.images.begin(), c.images.end());
    y.merge(c.y);
    visited += c.visited;
  }
  for (const auto& c : inner) {
    keeps_tail.merge(c.keeps_tail, cap);
    monotone.merge(c.monotone, cap);
  }
  detail::injectivity_sweep(std::move(images), g.vertex_count(), injective, cap);

  std::vector<LemmaReport> out{partition, defined,   gamma,     in_class,  positive,   pairing,
                               injective, disjoint,  vanishing, preserved, keeps_tail, monotone};
  for (auto& r : path) out.push_back(std::move(r));
  detail::alpha_sum_reports(g, y, visited, static_cast<unsigned>(m + n + 4), p, m, n, out);
  for (int i = 1; i <= 4; ++i) {
    LemmaReport r(p + "class-" + std::to_string(i), m, n);
    r.cases = sizes[i];
    out.push_back(std::move(r));
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (auto& r : out) r.elapsed_ms = ms;
  return out;
}

}  // namespace unimodal
