#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unimodal/alpha_maps.hpp"
#include "unimodal/graph.hpp"
#include "unimodal/indpoly.hpp"
#include "unimodal/report.hpp"

namespace unimodal {

// ---- T(3,m,n) and its two-vertex extension --------------------------------

// Index bookkeeping for the canonical order. Branch i (1..3) hangs off
// torso[i]; G[i] is the S(2^legs) spider rooted there.
struct TreeLayout {
  std::size_t m = 0;
  std::size_t n = 0;
  bool star = false;
  std::size_t tree_vertices = 0;  // |T(3,m,n)|
  std::size_t vertex_count = 0;   // tree_vertices, plus two when star
  VertexId root = 0;
  std::array<VertexId, 4> torso{};
  std::array<SpiderLayout, 4> G{};
  VertexId x = 0, y = 0;  // only meaningful when star

  std::size_t legs(int i) const { return G[i].heads.size(); }
  VertexId head(int i, std::size_t j) const { return G[i].heads.at(j - 1); }
  VertexId tail(int i, std::size_t j) const { return G[i].tails.at(j - 1); }
  VertexId v13() const { return head(1, 3); }
  VertexId v13p() const { return tail(1, 3); }
};

TreeLayout tree_layout(std::size_t m, std::size_t n, bool star = false);

// Everything the class predicates read from one alpha on T(3,m,n).
struct TreeView {
  const TreeLayout* layout = nullptr;
  AlphaMap alpha;  // over T(3,m,n) only
  bool positive = false;
  std::array<SpiderMap, 4> slice{};
  std::array<SpiderClass, 4> cls{};
  std::array<unsigned, 4> k{};  // k[i] = #(1,0) legs of branch i
  unsigned sum = 0;

  unsigned at(VertexId v) const { return alpha[v]; }
  unsigned root() const { return alpha[layout->root]; }
  unsigned torso(int i) const { return alpha[layout->torso[i]]; }
  unsigned head(int i, std::size_t j) const { return alpha[layout->head(i, j)]; }
  unsigned tail(int i, std::size_t j) const { return alpha[layout->tail(i, j)]; }
};

// positive: whether the whole shadow of alpha on T(3,m,n) is 2-s-positive.
TreeView make_view(const TreeLayout& layout, AlphaMap alpha, bool positive);

inline constexpr int kNClasses = 30;
inline constexpr int kMClasses = 29;

// Class predicates, i in 1..30 (resp. 1..29). Each is a literal transcription
// and is evaluated independently; nothing assumes the classes partition.
bool in_N_class(int i, const TreeView& v);
bool in_M_class(int i, const TreeView& v);
std::vector<int> N_labels(const TreeView& v);
std::vector<int> M_labels(const TreeView& v);

// N28 restricted to alphas whose (0,0) legs are exactly {(1,3)}.
bool in_N28_bar(const TreeView& v);

// psi_i for i in 1..29. Throws std::invalid_argument when a spider map is
// applied outside its domain.
AlphaMap apply_psi(int i, const TreeView& v);

// ---- whole suites -----------------------------------------------------

struct VerifyOptions {
  unsigned threads = 0;  // 0: default
  std::size_t violation_cap = kDefaultViolationCap;
  std::size_t max_vertices = kFeasibleMaxVertices;
};

// Exhaustive audit of the pairing on T(3,m,n).
std::vector<LemmaReport> verify_section4(std::size_t m, std::size_t n, const VerifyOptions& opt = {});
// Exhaustive audit of the pairing on the extended tree.
std::vector<LemmaReport> verify_section5(std::size_t m, std::size_t n, const VerifyOptions& opt = {});

// Extended-tree helpers, exposed for tests.
struct StarView {
  TreeView tree;  // alpha restricted to T(3,m,n)
  unsigned ax = 0, ay = 0;
  bool positive = false;   // shadow on the extended tree
  bool tree_in_N30 = false;
};
StarView make_star_view(const TreeLayout& layout, const AlphaMap& alpha, bool positive,
                        bool tree_positive);
bool in_Nprime_class(int i, const StarView& v);  // i in 1..4
bool in_Mprime_class(int i, const StarView& v);  // i in 1..3, v.positive required

// ---- headline chain -----------------------------------------------------

struct TheoremCheck {
  Family family = Family::T3mn;
  std::size_t m = 0, n = 0;
  std::size_t alpha_number = 0;     // degree of the independence polynomial
  std::size_t covered = 0;          // s_kk checks run for 1 <= k <= covered
  bool skk_nonnegative = false;     // [s_kk] Y >= 0 on the covered range
  bool skk_matches_defects = false; // [s_kk] Y equals i_k^2 - i_{k-1} i_{k+1}
  bool prefix_log_concave = false;  // i_0..i_{covered+1}
  std::size_t tail_from = 0;
  bool tail_ok = false;
  bool chain_unimodal = false;      // prefix + tail argument closes
  bool direct_unimodal = false;     // analyze() on the polynomial
  bool agree = false;               // chain_unimodal == direct_unimodal
};

TheoremCheck verify_theorem(Family family, std::size_t m, std::size_t n);
std::string theorem_check_json(const TheoremCheck& t);

}  // namespace unimodal
