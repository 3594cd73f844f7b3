// The headline argument as a computation: nonnegative [s_(k,k)] of
// I(x1) I(x2) gives a log-concave prefix, the known decreasing tail covers
// the rest, and the two pieces together force unimodality.

#include <stdexcept>

#include <json.hpp>

#include "unimodal/proof_check.hpp"
#include "unimodal/symfunc2.hpp"

namespace unimodal {

TheoremCheck verify_theorem(Family family, std::size_t m, std::size_t n) {
  if (family == Family::Spider2) throw std::invalid_argument("verify_theorem: only the T(3,m,n) families");
  TheoremCheck t;
  t.family = family;
  t.m = m;
  t.n = n;
  const Graph g = build_family(family, m, n);
  const IntPoly ip = indpoly_tree(g);
  t.alpha_number = ip.degree();
  t.covered = m + n + 4;

  const BivariateSymPoly y = f_p_2var(ip);
  const auto defects = log_concavity_defects(ip);
  t.skk_nonnegative = true;
  t.skk_matches_defects = true;
  for (unsigned k = 1; k <= t.covered; ++k) {
    const BigInt c = schur_coefficient(y, k, k);
    if (c < 0) t.skk_nonnegative = false;
    if (c != (k < defects.size() ? defects[k] : BigInt(0))) t.skk_matches_defects = false;
  }
  // i_0..i_(covered+1) log-concave, read straight off the sequence.
  t.prefix_log_concave = true;
  for (std::size_t k = 1; k <= t.covered && k + 1 <= t.alpha_number; ++k)
    if (ip[k] * ip[k] < ip[k - 1] * ip[k + 1]) t.prefix_log_concave = false;

  t.tail_from = tail_start(t.alpha_number);
  const SequenceReport rep = analyze(ip);
  t.tail_ok = rep.tail_ok;
  t.direct_unimodal = rep.unimodal;
  // A positive log-concave prefix is unimodal; if the nonincreasing tail
  // starts inside it, the whole sequence is.
  t.chain_unimodal = t.skk_nonnegative && t.prefix_log_concave && t.tail_ok && t.tail_from <= t.covered + 1;
  t.agree = t.chain_unimodal == t.direct_unimodal;
  return t;
}

std::string theorem_check_json(const TheoremCheck& t) {
  nlohmann::ordered_json j;
  j["family"] = family_id(t.family);
  j["m"] = t.m;
  j["n"] = t.n;
  j["alpha_number"] = t.alpha_number;
  j["covered"] = t.covered;
  j["skk_nonnegative"] = t.skk_nonnegative;
  j["skk_matches_defects"] = t.skk_matches_defects;
  j["prefix_log_concave"] = t.prefix_log_concave;
  j["tail_from"] = t.tail_from;
  j["tail_ok"] = t.tail_ok;
  j["chain_unimodal"] = t.chain_unimodal;
  j["direct_unimodal"] = t.direct_unimodal;
  j["agree"] = t.agree;
  return j.dump();
}

}  // namespace unimodal
