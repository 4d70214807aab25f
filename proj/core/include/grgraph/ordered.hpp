#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grgraph/grading.hpp"
#include "grgraph/graph.hpp"
#include "grgraph/ideals.hpp"

namespace grgraph {

struct LeadingIdealResult {
  IdealSet source;
  IdealSet leading;
  /// (member, its highest-degree component) for every nonzero member.
  std::vector<std::pair<Elem, Elem>> generator_trace;
};

/// I~: the left ideal generated by the top-degree components of the nonzero
/// members of I. Throws NotIntegerGraded.
LeadingIdealResult leading_ideal(const Grading& g, const IdealSet& ideal);

struct LemmaLLReport {
  bool part1 = true;  // I = I~ iff I graded
  bool part2 = true;  // I~ = 0 iff I = 0
  bool part3 = true;  // I ⊆ J implies I~ ⊆ J~
  bool part4 = true;  // for I ⊆ J: I = J iff I~ = J~
  bool idempotent = true;
  std::size_t ideals_checked = 0;
  std::size_t nested_pairs_checked = 0;
  std::optional<std::string> witness;

  bool ok() const { return part1 && part2 && part3 && part4 && idempotent; }
};

/// Exhaustive over `all_ideals`, which must hold every left ideal ({0} and R
/// included). Throws NotIntegerGraded.
LemmaLLReport lemma_ll_check(const Grading& g, const std::vector<IdealSet>& all_ideals);

struct OrderedComparison {
  bool graded_connected = false;
  bool ungraded_connected = false;
  ExtendedInt graded_girth;
  ExtendedInt ungraded_girth;
  bool local = false;  // unique maximal left ideal

  /// Set when girth(Gr) is infinite and girth(G) is 3.
  bool remark_triggered = false;
  std::optional<bool> item1;  // the graded maximal M is maximal among all proper left ideals
  std::optional<bool> item2;  // K~ = M for every maximal left ideal K
  std::optional<bool> item3;  // every maximal chain has exactly four terms
  /// Number of terms ({0} and R included) -> number of maximal chains.
  std::map<std::size_t, std::size_t> chain_lengths;
  std::optional<std::string> witness;

  bool connectivity_equivalent() const { return graded_connected == ungraded_connected; }
};

/// Both intersection graphs are built from the given families (all ideals and
/// graded ideals, {0} and R included). Throws NotIntegerGraded.
OrderedComparison ordered_comparison_check(const Grading& g, const std::vector<IdealSet>& all_ideals,
                                           const std::vector<IdealSet>& graded_ideals);

/// Members of `family` not strictly contained in another member.
std::vector<std::size_t> maximal_members(const std::vector<IdealSet>& family);

/// Maximal chains {0} = I_0 ⊊ ... ⊊ I_k = R of `all_ideals`, counted by
/// their number of terms.
std::map<std::size_t, std::size_t> maximal_chain_lengths(const std::vector<IdealSet>& all_ideals);

}  // namespace grgraph
