#include "grgraph/ordered.hpp"

#include <algorithm>
#include <functional>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

void require_integers(const Grading& g) {
  if (!g.group().is_integers())
    throw Error(ErrorKind::NotIntegerGraded, "grading group is " + g.group().description() + ", not Z");
}

std::size_t position(const std::vector<IdealSet>& family, const IdealSet& I) {
  return static_cast<std::size_t>(std::find(family.begin(), family.end(), I) - family.begin());
}

}  // namespace

LeadingIdealResult leading_ideal(const Grading& g, const IdealSet& ideal) {
  require_integers(g);
  LeadingIdealResult r{ideal, {}, {}};
  std::vector<Elem> tops;
  ideal.members.for_each([&](std::size_t x) {
    const auto parts = g.decompose(static_cast<Elem>(x));
    if (parts.empty()) return;
    // decompose() lists parts by ascending degree.
    r.generator_trace.emplace_back(static_cast<Elem>(x), parts.back().value);
    tops.push_back(parts.back().value);
  });
  r.leading = generated_left_ideal(g.ring(), tops);
  return r;
}

LemmaLLReport lemma_ll_check(const Grading& g, const std::vector<IdealSet>& all_ideals) {
  require_integers(g);
  LemmaLLReport r;
  auto note = [&](const std::string& text) {
    if (!r.witness) r.witness = text;
  };
  std::vector<IdealSet> tilde;
  for (const auto& I : all_ideals) {
    tilde.push_back(leading_ideal(g, I).leading);
    const IdealSet& T = tilde.back();
    ++r.ideals_checked;
    if ((T == I) != is_graded(g, I)) {
      r.part1 = false;
      note("part 1 fails at " + I.members.to_string());
    }
    if (T.is_zero() != I.is_zero()) {
      r.part2 = false;
      note("part 2 fails at " + I.members.to_string());
    }
    if (!(leading_ideal(g, T).leading == T)) {
      r.idempotent = false;
      note("leading ideal not idempotent at " + I.members.to_string());
    }
  }
  for (std::size_t i = 0; i < all_ideals.size(); ++i) {
    for (std::size_t j = 0; j < all_ideals.size(); ++j) {
      if (!all_ideals[i].members.is_subset_of(all_ideals[j].members)) continue;
      ++r.nested_pairs_checked;
      if (!tilde[i].members.is_subset_of(tilde[j].members)) {
        r.part3 = false;
        note("part 3 fails at " + all_ideals[i].members.to_string() + " ⊆ " + all_ideals[j].members.to_string());
      }
      if ((i == j) != (tilde[i] == tilde[j])) {
        r.part4 = false;
        note("part 4 fails at " + all_ideals[i].members.to_string() + " ⊆ " + all_ideals[j].members.to_string());
      }
    }
  }
  return r;
}

std::vector<std::size_t> maximal_members(const std::vector<IdealSet>& family) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (is_maximal(family[i], family)) out.push_back(i);
  return out;
}

std::map<std::size_t, std::size_t> maximal_chain_lengths(const std::vector<IdealSet>& all_ideals) {
  const std::size_t n = all_ideals.size();
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !all_ideals[i].members.is_subset_of(all_ideals[j].members)) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && all_ideals[i].members.is_subset_of(all_ideals[k].members) &&
                  all_ideals[k].members.is_subset_of(all_ideals[j].members);
      if (!between) covers[i].push_back(j);
    }
  }
  // Chains from each ideal up to R, by number of terms.
  std::vector<std::optional<std::map<std::size_t, std::size_t>>> memo(n);
  std::function<const std::map<std::size_t, std::size_t>&(std::size_t)> up =
      [&](std::size_t i) -> const std::map<std::size_t, std::size_t>& {
    if (!memo[i]) {
      std::map<std::size_t, std::size_t> m;
      if (all_ideals[i].is_whole()) m[1] = 1;
      for (std::size_t j : covers[i])
        for (const auto& [len, count] : up(j)) m[len + 1] += count;
      memo[i] = std::move(m);
    }
    return *memo[i];
  };
  for (std::size_t i = 0; i < n; ++i)
    if (all_ideals[i].is_zero()) return up(i);
  return {};
}

OrderedComparison ordered_comparison_check(const Grading& g, const std::vector<IdealSet>& all_ideals,
                                           const std::vector<IdealSet>& graded_ideals) {
  require_integers(g);
  const FiniteRing& R = g.ring();
  OrderedComparison c;
  const auto gr = build_intersection_graph(R, nontrivial_proper(graded_ideals), &g);
  const auto gg = build_intersection_graph(R, nontrivial_proper(all_ideals));
  c.graded_connected = connectivity(gr.graph).connected;
  c.ungraded_connected = connectivity(gg.graph).connected;
  c.graded_girth = girth(gr.graph);
  c.ungraded_girth = girth(gg.graph);

  std::vector<IdealSet> proper, graded_proper;
  for (const auto& I : all_ideals)
    if (!I.is_whole()) proper.push_back(I);
  for (const auto& I : graded_ideals)
    if (!I.is_whole()) graded_proper.push_back(I);
  const auto maximal = maximal_members(proper);
  c.local = maximal.size() == 1;

  c.remark_triggered = c.graded_girth.is_infinite() && c.ungraded_girth == ExtendedInt::finite(3);
  c.chain_lengths = maximal_chain_lengths(all_ideals);
  if (c.remark_triggered) {
    const auto graded_maximal = maximal_members(graded_proper);
    if (graded_maximal.size() != 1) {
      c.item1 = c.item2 = false;
      c.witness = "no unique graded maximal left ideal";
    } else {
      const IdealSet& M = graded_proper[graded_maximal.front()];
      c.item1 = std::find(maximal.begin(), maximal.end(), position(proper, M)) != maximal.end();
      c.item2 = std::all_of(maximal.begin(), maximal.end(),
                            [&](std::size_t k) { return leading_ideal(g, proper[k]).leading == M; });
      if (!*c.item1) c.witness = "graded maximal ideal is not maximal among all left ideals";
      else if (!*c.item2 && !c.witness) c.witness = "some maximal K has K~ != M";
    }
    c.item3 = c.chain_lengths.size() == 1 && c.chain_lengths.begin()->first == 4;
    if (!*c.item3 && !c.witness) c.witness = "maximal chains do not all have four terms";
  }
  return c;
}

}  // namespace grgraph
