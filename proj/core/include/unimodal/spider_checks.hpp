#pragma once

#include <cstddef>
#include <vector>

#include "unimodal/report.hpp"

namespace unimodal {

// Exhaustive checks of the spider-level facts the pairing rests on. Each
// returns one report; `legs` bounds the spiders S(2^n) that are swept.

// phi_S then phi_inverse is the identity on A_k x subsets of {1..k}.
LemmaReport check_phi_roundtrip(std::size_t max_legs);
// No two (alpha, S) pairs share an image.
LemmaReport check_phi_injective(std::size_t max_legs);
// Every member of x^t_{S,n} is phi_S of a member of A_t.
LemmaReport check_phi_onto(std::size_t max_legs);
// A map lies in at most one x^t_{S,n}.
LemmaReport check_x_disjoint(std::size_t max_legs);
// A_k maps whose clan is S(1^k, 2^r), k >= 3: shadow is
// s_(r+k,r+1) - s_(r+k-1,r+2), and every phi_j image dominates the sum.
LemmaReport check_pure_shape(std::size_t max_legs);
LemmaReport check_pure_shape_bound(std::size_t max_legs);
// A non-positive map on S(2^n) lies in A_k with k >= 3 and pairs with
// every phi_j image.
LemmaReport check_spider_pairing(std::size_t max_legs);
// Same with one extra short leg whose value is carried along.
LemmaReport check_short_leg_pairing(std::size_t max_legs);
// Forests of spiders, every component in some A_k with k >= 3: one phi per
// component pairs (single index version and subset version).
LemmaReport check_forest_pairing(std::size_t max_components, std::size_t max_legs);
LemmaReport check_forest_subset_pairing(std::size_t max_components, std::size_t max_legs);
// A unique non-positive clan component with bipartition (r+2, r) leaves no
// isolated clan vertex. Swept over a fixed list of small forests.
LemmaReport check_no_isolated();
// Shadow factors over the hat/bar split of any clan component, and keeps
// factoring when the hat side is reassigned. Trees up to max_vertices.
LemmaReport check_hat_bar(std::size_t max_vertices);
LemmaReport check_hat_bar_reassigned(std::size_t max_vertices);

struct SpiderSuiteOptions {
  std::size_t max_legs = 4;
  std::size_t forest_components = 3;
  std::size_t forest_legs = 4;
  std::size_t hat_bar_vertices = 10;
  std::size_t reassign_vertices = 7;
};

std::vector<LemmaReport> verify_spider_suite(const SpiderSuiteOptions& opt = {});

}  // namespace unimodal
