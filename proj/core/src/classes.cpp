// Class predicates and pairing maps on T(3,m,n).
//
// Notation used below: Gi is the spider hanging off torso vi, ki counts its
// (1,0) legs, "A+" means the Gi slice has a 2-s-positive shadow, X(S) is
// membership of x_{S,.} for any admissible t and Xt(S, t) pins t too.

#include <stdexcept>
#include <string>

#include "unimodal/proof_check.hpp"

namespace unimodal {

namespace {

bool a_plus(const SpiderClass& c) { return c.kind != SpiderKind::NonPositive; }
bool a_minus(const SpiderClass& c) { return c.kind == SpiderKind::NonPositive; }

bool in_X(const SpiderClass& c, const IndexSet& S) { return c.membership && c.membership->S == S; }
bool in_Xt(const SpiderClass& c, const IndexSet& S, unsigned t) {
  return in_X(c, S) && c.membership->t == t;
}
bool in_X_from(const SpiderClass& c, const IndexSet& S, unsigned t_min) {
  return in_X(c, S) && c.membership->t >= t_min;
}
// X_{j,.} for j >= 1 is x_{{j},.}.
bool in_Xj(const SpiderClass& c, unsigned j) { return in_X(c, IndexSet{j}); }

// The j >= 0 with the slice in X_{j,.}; -1 when the slice is not positive.
int x_index(const SpiderClass& c) { return a_plus(c) ? static_cast<int>(c.index) : -1; }

bool in_Z(const SpiderClass& c) { return a_plus(c) && c.in_Z; }

bool torsos(const TreeView& v, unsigned a0, unsigned a1, unsigned a2, unsigned a3) {
  return v.root() == a0 && v.torso(1) == a1 && v.torso(2) == a2 && v.torso(3) == a3;
}

unsigned k_sum(const TreeView& v) { return v.k[1] + v.k[2] + v.k[3]; }

bool all_heads_zero(const TreeView& v) {
  for (int i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= v.layout->legs(i); ++j)
      if (v.head(i, j) != 0) return false;
  return true;
}

bool some_head_one(const TreeView& v) {
  for (int i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= v.layout->legs(i); ++j)
      if (v.head(i, j) == 1) return true;
  return false;
}

// G1 leg values (v1j, v1j') for j = 1..3.
bool g1_legs(const TreeView& v, unsigned h1, unsigned t1, unsigned h2, unsigned t2, unsigned h3,
             unsigned t3) {
  return v.head(1, 1) == h1 && v.tail(1, 1) == t1 && v.head(1, 2) == h2 && v.tail(1, 2) == t2 &&
         v.head(1, 3) == h3 && v.tail(1, 3) == t3;
}

unsigned full_weight(const TreeLayout& L) { return static_cast<unsigned>(2 * L.m + 2 * L.n + 10); }

bool N_body(int i, const TreeView& v) {
  const auto& c = v.cls;
  const auto& k = v.k;
  const bool r0 = v.root() == 0;
  switch (i) {
    case 1: return r0 && a_minus(c[1]) && a_plus(c[2]) && a_plus(c[3]);
    case 2: return r0 && a_minus(c[2]) && a_plus(c[1]) && a_plus(c[3]) && k[2] == 3;
    case 3: return r0 && a_minus(c[3]) && a_plus(c[1]) && a_plus(c[2]) && k[3] == 3;
    case 4: return r0 && a_minus(c[2]) && a_plus(c[1]) && a_plus(c[3]) && k[2] >= 4;
    case 5: return r0 && a_minus(c[3]) && a_plus(c[1]) && a_plus(c[2]) && k[3] >= 4;
    case 6: return r0 && a_minus(c[1]) && a_minus(c[2]) && a_plus(c[3]);
    case 7: return r0 && a_minus(c[1]) && a_minus(c[3]) && a_plus(c[2]);
    case 8: return r0 && a_minus(c[2]) && a_minus(c[3]) && a_plus(c[1]);
    case 9: return r0 && a_minus(c[1]) && a_minus(c[2]) && a_minus(c[3]);
    case 10: return torsos(v, 1, 1, 0, 0) && k[1] == 2;
    case 11: return torsos(v, 1, 1, 0, 0) && k[1] == 3;
    case 12: return torsos(v, 1, 0, 1, 0) && k[2] == 2;
    case 13: return torsos(v, 1, 0, 1, 0) && k[2] >= 3;
    case 14: return torsos(v, 1, 0, 0, 1) && k[3] == 2;
    case 15: return torsos(v, 1, 0, 0, 1) && k[3] >= 3;
    case 16: return torsos(v, 1, 0, 1, 1);
    case 17: return torsos(v, 1, 1, 0, 1) && !in_Xj(c[2], 1) && k[3] >= 1;
    case 18: return torsos(v, 1, 1, 0, 1) && !in_Xj(c[2], 1) && k[3] == 0;
    case 19: return torsos(v, 1, 1, 0, 1) && in_Xj(c[2], 1) && k[1] >= 2;
    case 20: return torsos(v, 1, 1, 0, 1) && in_Xj(c[2], 1) && k[1] <= 1;
    case 21: return torsos(v, 1, 1, 1, 0) && !in_Xj(c[3], 1) && k[2] >= 2;
    case 22: return torsos(v, 1, 1, 1, 0) && !in_Xj(c[3], 1) && k[2] <= 1 && k[1] == 2;
    case 23: return torsos(v, 1, 1, 1, 0) && !in_Xj(c[3], 1) && k[2] <= 1 && k[1] == 3;
    case 24: return torsos(v, 1, 1, 1, 0) && in_Xj(c[3], 1) && k[2] >= 1;
    case 25: return torsos(v, 1, 1, 1, 0) && in_Xj(c[3], 1) && k[2] == 0;
    case 26:
      return torsos(v, 1, 1, 1, 1) && k_sum(v) >= 4 && (k[1] == 3 || k[2] >= 2 || k[3] >= 2);
    case 27: return torsos(v, 1, 1, 1, 1) && k[1] == 2 && k[2] == 1 && k[3] == 1;
    case 28:
      return torsos(v, 1, 1, 1, 1) && k_sum(v) == 0 && some_head_one(v) &&
             v.sum < full_weight(*v.layout);
    case 29: return torsos(v, 1, 1, 1, 1) && all_heads_zero(v);
    case 30:
      return torsos(v, 1, 1, 1, 1) && k_sum(v) == 0 && some_head_one(v) &&
             v.sum == full_weight(*v.layout);
    default: throw std::out_of_range("in_N_class: class index out of range");
  }
}

// Exactly one leg (i,j) over all branches has (v_ij, v_ij') = (0,1).
bool single_01_leg(const TreeView& v) {
  unsigned count = 0;
  for (int i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= v.layout->legs(i); ++j)
      if (v.head(i, j) == 0 && v.tail(i, j) == 1) ++count;
  return count == 1;
}

bool M_body(int i, const TreeView& v) {
  const auto& c = v.cls;
  const auto& k = v.k;
  const bool r0 = v.root() == 0;
  const bool r1 = v.root() == 1;
  const bool r1_bare = torsos(v, 1, 0, 0, 0);
  const bool r2_bare = torsos(v, 2, 0, 0, 0);
  const int xi = x_index(c[2]);
  const int xj = x_index(c[3]);
  switch (i) {
    case 1: return r0 && in_Xt(c[1], {1}, 3) && in_Z(c[2]) && in_Z(c[3]);
    case 2: return r0 && in_Z(c[1]) && in_Z(c[3]) && in_Xt(c[2], {1}, 3);
    case 3: return r0 && in_Z(c[1]) && in_Z(c[2]) && in_Xt(c[3], {1}, 3);
    case 4:
      return r0 && a_plus(c[1]) && (xi == 3 || xi == 4) && in_X_from(c[2], {unsigned(xi)}, 4) &&
             xj >= 0 && (xi + xj) % 2 == 1;
    case 5:
      return r0 && a_plus(c[1]) && xi >= 0 && (xj == 3 || xj == 4) &&
             in_X_from(c[3], {unsigned(xj)}, 4) && (xi + xj) % 2 == 0;
    case 6:
      return r0 && in_Xt(c[1], {1}, 3) && (xi == 1 || xi == 2) && in_X_from(c[2], {unsigned(xi)}, 3) &&
             xj >= 0 && (xi + xj) % 2 == 1;
    case 7:
      return r0 && in_Xt(c[1], {1}, 3) && xi >= 0 && (xj == 1 || xj == 2) &&
             in_X_from(c[3], {unsigned(xj)}, 3) && (xi + xj) % 2 == 0;
    case 8: return r0 && a_plus(c[1]) && in_X_from(c[2], {1, 2}, 3) && in_X_from(c[3], {}, 3);
    case 9:
      return r0 && in_Xt(c[1], {}, 3) && in_X_from(c[2], {1, 2, 3}, 3) && in_X_from(c[3], {}, 3);
    case 10: return r1 && in_Xt(c[1], {1}, 2) && in_Z(c[2]) && in_Z(c[3]);
    case 11: return r1 && v.torso(1) == 1 && g1_legs(v, 1, 1, 1, 0, 0, 0) && v.torso(2) == 0 &&
                    v.torso(3) == 0;
    case 12: return r1_bare && in_Xt(c[2], {1}, 2) && in_Z(c[1]) && in_Z(c[3]);
    case 13:
      return r1_bare && (xi == 2 || xi == 3) && in_X_from(c[2], {unsigned(xi)}, 3) && xj >= 0 &&
             (xi + xj) % 2 == 1;
    case 14: return r1_bare && in_Z(c[1]) && in_Z(c[2]) && in_Xt(c[3], {1}, 2);
    case 15:
      return r1_bare && xi >= 0 && (xj == 2 || xj == 3) && in_X_from(c[3], {unsigned(xj)}, 3) &&
             (xi + xj) % 2 == 0;
    case 16:
      return r1_bare && ((in_X(c[2], {1, 2}) && in_X(c[3], {})) || (in_X(c[2], {}) && in_X(c[3], {1, 2})));
    case 17:
      return r2_bare && in_X(c[1], {}) && !in_Xj(c[2], 1) && in_Xj(c[3], 1) && k[1] + k[3] >= 2;
    case 18:
      return r1 && v.torso(1) == 1 && g1_legs(v, 1, 1, 1, 1, 0, 0) && v.torso(2) == 0 &&
             !in_Xj(c[2], 1) && in_X(c[3], {});
    case 19: return r2_bare && in_Xj(c[1], 2) && in_Xj(c[2], 1) && in_X(c[3], {});
    case 20: return r2_bare && in_X(c[1], {}) && in_Xj(c[2], 1) && in_X_from(c[3], {2}, 2);
    case 21: return r2_bare && in_X(c[1], {}) && in_Xj(c[2], 2) && !in_Xj(c[3], 1);
    case 22:
      return r2_bare && in_X(c[1], {}) && in_Xt(c[2], {1}, 1) && !in_Xj(c[3], 1) && !in_Xj(c[3], 2);
    case 23:
      return r1 && v.torso(1) == 1 && g1_legs(v, 1, 1, 0, 1, 1, 0) && v.torso(2) == 0 &&
             v.torso(3) == 0 && in_X(c[2], {}) && !in_Xj(c[3], 1);
    case 24: return r2_bare && in_X(c[1], {}) && in_Xj(c[2], 1) && in_Xj(c[3], 1);
    case 25:
      return r1 && v.torso(1) == 1 && g1_legs(v, 0, 1, 1, 1, 1, 0) && v.torso(2) == 0 &&
             v.torso(3) == 0 && in_X(c[2], {}) && in_Xj(c[3], 1);
    case 26:
      return r2_bare && ((in_Xt(c[1], {1, 2}, 3) && in_X(c[2], {}) && in_X(c[3], {})) ||
                         (in_X(c[1], {}) && in_X(c[2], {1, 2}) && in_X(c[3], {})) ||
                         (in_X(c[1], {}) && in_X(c[2], {}) && in_X(c[3], {1, 2})));
    case 27: return r2_bare && in_Xt(c[1], {1}, 2) && in_Xt(c[2], {}, 1) && in_Xt(c[3], {1}, 1);
    case 28: return torsos(v, 1, 1, 1, 1) && k_sum(v) == 1 && single_01_leg(v);
    case 29: return torsos(v, 0, 2, 1, 1) && all_heads_zero(v);
    default: throw std::out_of_range("in_M_class: class index out of range");
  }
}

// ---- maps -----------------------------------------------------------------

struct Builder {
  const TreeView& v;
  AlphaMap out;
  explicit Builder(const TreeView& view) : v(view), out(view.alpha) {}

  void phi(int i, const IndexSet& S) { write_spider_slice(out, v.layout->G[i], phi_S(v.slice[i], S)); }
  void set(VertexId u, unsigned value) { out[u] = value; }
  void root(unsigned value) { out[v.layout->root] = value; }
};

int require_index(const SpiderClass& c, const char* what) {
  const int j = x_index(c);
  if (j < 0) throw std::invalid_argument(std::string("psi: ") + what + " slice is not positive");
  return j;
}

AlphaMap leg_swap(const TreeView& v) {
  const TreeLayout& L = *v.layout;
  // (0,0) leg with the largest branch, then smallest leg index.
  int p = 0;
  std::size_t q = 0;
  for (int i = 3; i >= 1 && p == 0; --i)
    for (std::size_t j = 1; j <= L.legs(i); ++j)
      if (v.head(i, j) == 0 && v.tail(i, j) == 0) {
        p = i;
        q = j;
        break;
      }
  // (1,1) leg with the smallest branch, then smallest leg index.
  int a = 0;
  std::size_t b = 0;
  for (int i = 1; i <= 3 && a == 0; ++i)
    for (std::size_t j = 1; j <= L.legs(i); ++j)
      if (v.head(i, j) == 1 && v.tail(i, j) == 1) {
        a = i;
        b = j;
        break;
      }
  if (p == 0 || a == 0) throw std::invalid_argument("psi: no (0,0) or no (1,1) leg to exchange");
  AlphaMap out = v.alpha;
  out[L.head(p, q)] = 1;
  out[L.head(a, b)] = 0;
  return out;
}

}  // namespace

bool in_N_class(int i, const TreeView& v) { return !v.positive && N_body(i, v); }
bool in_M_class(int i, const TreeView& v) { return v.positive && M_body(i, v); }

std::vector<int> N_labels(const TreeView& v) {
  std::vector<int> out;
  for (int i = 1; i <= kNClasses; ++i)
    if (in_N_class(i, v)) out.push_back(i);
  return out;
}

std::vector<int> M_labels(const TreeView& v) {
  std::vector<int> out;
  for (int i = 1; i <= kMClasses; ++i)
    if (in_M_class(i, v)) out.push_back(i);
  return out;
}

bool in_N28_bar(const TreeView& v) {
  if (!in_N_class(28, v)) return false;
  const TreeLayout& L = *v.layout;
  for (int i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= L.legs(i); ++j) {
      const bool zero_leg = v.head(i, j) == 0 && v.tail(i, j) == 0;
      if (zero_leg != (i == 1 && j == 3)) return false;
    }
  return true;
}

AlphaMap apply_psi(int i, const TreeView& v) {
  const TreeLayout& L = *v.layout;
  Builder b(v);
  switch (i) {
    case 1: b.phi(1, {1}); break;
    case 2: b.phi(2, {1}); break;
    case 3: b.phi(3, {1}); break;
    case 4: {
      const int j = require_index(v.cls[3], "third");
      b.phi(2, {j % 2 == 0 ? 3u : 4u});
      break;
    }
    case 5: {
      // the parity is read off the second branch; the third branch is mapped
      const int j = require_index(v.cls[2], "second");
      b.phi(3, {j % 2 == 0 ? 4u : 3u});
      break;
    }
    case 6: {
      const int j = require_index(v.cls[3], "third");
      b.phi(1, {1});
      b.phi(2, {j % 2 == 1 ? 2u : 1u});
      break;
    }
    case 7: {
      const int j = require_index(v.cls[2], "second");
      b.phi(1, {1});
      b.phi(3, {j % 2 == 0 ? 2u : 1u});
      break;
    }
    case 8:
      b.phi(2, {1, 2});
      b.phi(3, {});
      break;
    case 9:
      b.phi(2, {1, 2, 3});
      b.phi(1, {});
      b.phi(3, {});
      b.root(0);
      break;
    case 10: b.phi(1, {1}); break;
    case 11:
      b.set(L.tail(1, 1), 1);
      b.set(L.head(1, 3), 0);
      break;
    case 12: b.phi(2, {1}); break;
    case 13: {
      const int j = require_index(v.cls[3], "third");
      b.phi(2, {j % 2 == 1 ? 2u : 3u});
      break;
    }
    case 14: b.phi(3, {1}); break;
    case 15: {
      const int j = require_index(v.cls[2], "second");
      b.phi(3, {j % 2 == 1 ? 3u : 2u});
      break;
    }
    case 16:
      if (v.k[2] >= 2) {
        b.phi(2, {1, 2});
        b.phi(3, {});
      } else {
        b.phi(3, {1, 2});
        b.phi(2, {});
      }
      break;
    case 17:
      b.root(2);
      b.phi(1, {});
      b.phi(3, {1});
      break;
    case 18:
      b.set(L.tail(1, 1), 1);
      b.set(L.tail(1, 2), 1);
      b.set(L.torso[3], 0);
      b.set(L.head(1, 3), 0);
      break;
    case 19:
      b.root(2);
      b.phi(1, {2});
      b.phi(3, {});
      break;
    case 20:
      b.root(2);
      b.phi(3, {2});
      b.phi(1, {});
      break;
    case 21:
      b.root(2);
      b.phi(2, {2});
      b.phi(1, {});
      break;
    case 22:
      b.root(2);
      b.phi(2, {1});
      b.phi(1, {});
      break;
    case 23:
      b.set(L.tail(1, 1), 1);
      b.set(L.tail(1, 2), 1);
      b.set(L.torso[2], 0);
      b.set(L.head(1, 2), 0);
      break;
    case 24:
      b.root(2);
      b.phi(1, {});
      b.phi(2, {1});
      break;
    case 25:
      b.set(L.tail(1, 1), 1);
      b.set(L.tail(1, 2), 1);
      b.set(L.head(1, 1), 0);
      b.set(L.torso[2], 0);
      break;
    case 26:
      b.root(2);
      if (v.k[1] == 3) {
        b.phi(1, {1, 2});
        b.phi(2, {});
        b.phi(3, {});
      } else if (v.k[2] >= 2) {
        b.phi(1, {});
        b.phi(2, {1, 2});
        b.phi(3, {});
      } else {
        b.phi(1, {});
        b.phi(2, {});
        b.phi(3, {1, 2});
      }
      break;
    case 27:
      b.root(2);
      b.phi(1, {1});
      b.phi(2, {});
      b.phi(3, {1});
      break;
    case 28: return leg_swap(v);
    case 29:
      b.set(L.torso[1], 2);
      b.root(0);
      break;
    default: throw std::out_of_range("apply_psi: class index out of range");
  }
  return std::move(b.out);
}

}  // namespace unimodal
