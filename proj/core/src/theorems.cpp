#include "grgraph/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grgraph/errors.hpp"
#include "grgraph/ordered.hpp"

namespace grgraph {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Collects part verdicts and folds them into a report.
class Check {
 public:
  explicit Check(std::string id) { report_.id = std::move(id); }

  /// antecedent false -> VACUOUS; otherwise PASS iff consequent.
  void implication(const std::string& name, bool antecedent, bool consequent, const std::string& detail) {
    PartVerdict p{name, Verdict::vacuous, detail};
    if (antecedent) p.verdict = consequent ? Verdict::pass : Verdict::fail;
    add(std::move(p));
  }
  void vacuous(const std::string& name, const std::string& detail) { add({name, Verdict::vacuous, detail}); }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void witness(const std::string& text) {
    if (!report_.witness) report_.witness = text;
  }

  TheoremReport finish(std::string hypothesis_details, std::string conclusion_details) {
    report_.hypothesis_details = std::move(hypothesis_details);
    report_.conclusion_details = std::move(conclusion_details);
    bool any_fail = false, any_pass = false;
    for (const auto& p : report_.parts) {
      any_fail = any_fail || p.verdict == Verdict::fail;
      any_pass = any_pass || p.verdict == Verdict::pass;
    }
    report_.hypotheses_met = any_fail || any_pass;
    report_.verdict = any_fail ? Verdict::fail : any_pass ? Verdict::pass : Verdict::vacuous;
    if (any_fail && !report_.witness) {
      for (const auto& p : report_.parts)
        if (p.verdict == Verdict::fail) {
          report_.witness = p.name + ": " + p.detail;
          break;
        }
    }
    return std::move(report_);
  }

 private:
  void add(PartVerdict p) { report_.parts.push_back(std::move(p)); }
  TheoremReport report_;
};

bool is_null_with_at_least_two(const Graph& g) { return g.order() >= 2 && g.size() == 0; }

std::string graph_summary(const Graph& g) {
  return std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges";
}

/// Graded vertices not strictly below another graded vertex; when hI* is
/// empty the zero ideal is the only graded maximal one and this is empty.
std::vector<std::size_t> graded_maximal(Analysis& a) {
  std::vector<std::size_t> out;
  const auto& v = a.graded_vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (is_maximal(v[i], v)) out.push_back(i);
  return out;
}

std::vector<std::size_t> graded_minimal(Analysis& a) {
  std::vector<std::size_t> out;
  const auto& v = a.graded_vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (is_minimal(v[i], v)) out.push_back(i);
  return out;
}

/// I, J in `family` with I + J = R and I ∩ J = 0, both fields under the
/// induced grading of `g`. Returns a description of the first such pair.
std::optional<std::string> field_pair(const Grading& g, const std::vector<IdealSet>& family) {
  const FiniteRing& R = g.ring();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].size() * family[j].size() != R.size()) continue;
      if (family[i].members.intersection_count(family[j].members) != 1) continue;
      auto fi = graded_factor(g, family[i]);
      auto fj = graded_factor(g, family[j]);
      if (fi && fj && is_graded_field(*fi) && is_graded_field(*fj))
        return describe_ideal(R, family[i], &g) + " x " + describe_ideal(R, family[j], &g);
    }
  }
  return std::nullopt;
}

struct FactorGraph {
  Grading grading;
  IntersectionGraph graph;
};

FactorGraph factor_graph(const Grading& factor, const Limits& limits) {
  auto vertices = nontrivial_proper(enumerate_graded_left_ideals(factor, limits.ideal_count));
  auto graph = build_intersection_graph(factor.ring(), vertices, &factor);
  return {factor, std::move(graph)};
}

std::string require_commutative(Check& c, Analysis& a) {
  if (a.ring().commutative()) return {};
  c.note("ring is not commutative");
  return "R not commutative";
}

// ---- section 2 ----------------------------------------------------------

TheoremReport check_t1(Analysis& a) {
  Check c("t1");
  const Graph& g = a.graded_graph().graph;
  const bool disconnected = !connectivity(g).connected;
  const bool null2 = is_null_with_at_least_two(g);
  c.implication("disconnected => N_n (n>=2)", disconnected, null2, graph_summary(g));
  c.implication("N_n (n>=2) => disconnected", null2, disconnected, graph_summary(g));
  return c.finish("Gr disconnected: " + yes_no(disconnected), "Gr null with >= 2 vertices: " + yes_no(null2));
}

TheoremReport check_c1(Analysis& a) {
  Check c("c1");
  const auto& v = a.graded_vertices();
  const bool disconnected = !connectivity(a.graded_graph().graph).connected;
  bool all_good = true;
  std::string bad;
  for (const auto& I : v) {
    const bool ok = is_principal(a.ring(), I) && is_minimal(I, v) && is_maximal(I, v);
    if (!ok && all_good) bad = describe_ideal(a.ring(), I, &a.grading());
    all_good = all_good && ok;
  }
  const std::size_t minimal = graded_minimal(a).size();
  c.implication("disconnected => at least two graded minimal", disconnected, minimal >= 2,
                std::to_string(minimal) + " graded minimal ideals");
  c.implication("disconnected => every graded ideal principal, minimal and maximal", disconnected, all_good,
                all_good ? "all graded vertices qualify" : "fails at " + bad);
  return c.finish("Gr disconnected: " + yes_no(disconnected), std::to_string(minimal) + " graded minimal ideals");
}

TheoremReport check_c11(Analysis& a) {
  Check c("c11");
  if (auto why = require_commutative(c, a); !why.empty()) {
    c.vacuous("both directions", why);
    return c.finish(why, "");
  }
  const bool disconnected = !connectivity(a.graded_graph().graph).connected;
  const auto pair = field_pair(a.grading(), a.graded_vertices());
  const std::string detail = pair ? "R = " + *pair : "no decomposition into two graded fields";
  c.implication("disconnected => R1 x R2 graded fields", disconnected, pair.has_value(), detail);
  c.implication("R1 x R2 graded fields => disconnected", pair.has_value(), disconnected, detail);
  return c.finish("commutative; Gr disconnected: " + yes_no(disconnected), detail);
}

TheoremReport check_c101(Analysis& a) {
  Check c("c101");
  if (auto why = require_commutative(c, a); !why.empty()) {
    c.vacuous("connected => maximal ideals meet", why);
    return c.finish(why, "");
  }
  const bool connected = connectivity(a.graded_graph().graph).connected;
  const auto maximal = graded_maximal(a);
  const auto& v = a.graded_vertices();
  bool meet = true;
  std::string detail = std::to_string(maximal.size()) + " graded maximal ideals";
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j)
      if (v[maximal[i]].members.intersection_count(v[maximal[j]].members) == 1) {
        if (meet) detail += "; trivial intersection " + a.graded_graph().labels[maximal[i]] + ", " +
                            a.graded_graph().labels[maximal[j]];
        meet = false;
      }
  c.implication("connected => graded maximal ideals pairwise meet", connected, meet, detail);
  return c.finish("commutative; Gr connected: " + yes_no(connected), detail);
}

TheoremReport check_t2(Analysis& a) {
  Check c("t2");
  const Graph& g = a.graded_graph().graph;
  const bool connected = connectivity(g).connected;
  const ExtendedInt d = diameter(g);
  c.implication("connected => diam <= 2", connected, !d.is_infinite() && *d.value <= 2, "diameter " + d.to_string());
  return c.finish("Gr connected: " + yes_no(connected), "diameter " + d.to_string());
}

TheoremReport check_t51(Analysis& a) {
  Check c("t51");
  if (auto why = require_commutative(c, a); !why.empty()) {
    c.vacuous("both directions", why);
    return c.finish(why, "");
  }
  const bool domain = is_graded_domain(a.grading());
  const bool reduced = is_graded_reduced(a.grading());
  const bool complete = classify_shape(a.graded_graph().graph).complete;
  const std::string detail =
      "graded domain " + yes_no(domain) + ", graded reduced " + yes_no(reduced) + ", Gr complete " + yes_no(complete);
  c.implication("graded domain => reduced and complete", domain, reduced && complete, detail);
  c.implication("reduced and complete => graded domain", reduced && complete, domain, detail);
  c.note("the empty graph and K_1 count as complete");
  return c.finish("commutative", detail);
}

TheoremReport check_t52(Analysis& a) {
  Check c("t52");
  const Graph& g = a.graded_graph().graph;
  if (g.size() == 0) {
    c.vacuous("(1) => (2) => (3) => (1)", "Gr is a null graph");
    return c.finish("Gr not null: no", "");
  }
  const ShapeFlags f = classify_shape(g);
  const bool unique_minimal = graded_minimal(a).size() == 1;
  const std::string detail = "regular " + yes_no(f.regular) + ", unique graded minimal " + yes_no(unique_minimal) +
                             ", complete " + yes_no(f.complete);
  c.implication("(1) regular => (2) unique graded minimal", f.regular, unique_minimal, detail);
  c.implication("(2) unique graded minimal => (3) complete", unique_minimal, f.complete, detail);
  c.implication("(3) complete => (1) regular", f.complete, f.regular, detail);
  c.note("items relabelled (1) regular, (2) unique graded minimal ideal, (3) complete; finite rings are graded Artinian");
  return c.finish("Gr not null: yes", detail);
}

// ---- section 3 ----------------------------------------------------------

TheoremReport check_t6(Analysis& a) {
  Check c("t6");
  if (auto why = require_commutative(c, a); !why.empty()) {
    c.vacuous("gamma <= 2", why);
    return c.finish(why, "");
  }
  const auto cap = a.limits().graph_order;
  const Graph& g = a.graded_graph().graph;
  const std::size_t gamma = domination_number(g, cap);
  c.implication("gamma(Gr) <= 2", true, gamma <= 2, "gamma " + std::to_string(gamma));

  const bool indecomposable = is_graded_indecomposable(a.ring(), a.graded_vertices());
  if (indecomposable && g.order() == 0) {
    c.vacuous("(1) indecomposable => gamma = 1", "Gr is empty, gamma = 0");
    c.note("(1) read for a nonempty Gr; an empty graph has gamma 0");
  } else {
    c.implication("(1) indecomposable => gamma = 1", indecomposable, gamma == 1,
                  "indecomposable " + yes_no(indecomposable) + ", gamma " + std::to_string(gamma));
  }

  // (2) over every internal decomposition R = S x T by graded ideals.
  const auto& v = a.graded_vertices();
  bool evaluated = false, holds = true, skipped_empty = false;
  std::string detail;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i].size() * v[j].size() != a.ring().size()) continue;
      if (v[i].members.intersection_count(v[j].members) != 1) continue;
      auto s = graded_factor(a.grading(), v[i]);
      auto t = graded_factor(a.grading(), v[j]);
      if (!s || !t) continue;
      const auto gs = factor_graph(*s, a.limits());
      const auto gt = factor_graph(*t, a.limits());
      if (gs.graph.order() == 0 || gt.graph.order() == 0) {
        skipped_empty = true;
        continue;
      }
      const std::size_t ds = domination_number(gs.graph.graph, cap), dt = domination_number(gt.graph.graph, cap);
      const bool lhs = gamma == 2, rhs = ds == 2 && dt == 2;
      const std::string text = "S = " + a.graded_graph().labels[i] + " (gamma " + std::to_string(ds) + "), T = " +
                               a.graded_graph().labels[j] + " (gamma " + std::to_string(dt) + ")";
      if (!evaluated || lhs != rhs) detail = text;
      evaluated = true;
      holds = holds && lhs == rhs;
    }
  }
  if (evaluated) {
    c.implication("(2) gamma(R) = 2 <=> gamma(S) = gamma(T) = 2", true, holds, detail);
  } else {
    c.vacuous("(2) gamma(R) = 2 <=> gamma(S) = gamma(T) = 2",
              skipped_empty ? "every decomposition has a factor with empty graph" : "R is graded indecomposable");
  }
  if (skipped_empty)
    c.note("(2) is not evaluated when a factor graph is empty: a product of two graded fields has gamma 2 while both "
           "factor graphs are empty");
  return c.finish("commutative; indecomposable " + yes_no(indecomposable), "gamma " + std::to_string(gamma));
}

TheoremReport check_l18(Analysis& a) {
  Check c("l18");
  const auto& v = a.graded_vertices();
  const Graph& g = a.graded_graph().graph;
  const std::size_t omega = clique_number(g, a.limits().graph_order);
  // Longest strictly ascending chain of graded vertices, and every nested
  // pair must be adjacent so that chains are cliques.
  std::vector<std::size_t> longest(v.size(), 1);
  bool chains_are_cliques = true;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (v[i].members.is_subset_of(v[j].members)) {
        longest[j] = std::max(longest[j], longest[i] + 1);
        chains_are_cliques = chains_are_cliques && g.adjacent(i, j);
      }
  const std::size_t chain = v.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
  const std::string detail = "omega " + std::to_string(omega) + ", longest graded chain " + std::to_string(chain);
  c.implication("omega finite => graded chains are cliques of size <= omega", true,
                chains_are_cliques && chain <= omega, detail);
  c.note("finite rings are graded Artinian; the check verifies the chain-to-clique step of the argument");
  return c.finish("omega(Gr) finite: yes", detail);
}

TheoremReport check_l187(Analysis& a) {
  Check c("l187");
  if (auto why = require_commutative(c, a); !why.empty()) {
    c.vacuous("(1) and (2)", why);
    return c.finish(why, "");
  }
  const Graph& g = a.graded_graph().graph;
  const std::size_t omega = clique_number(g, a.limits().graph_order);
  const bool n1_or_n2 = g.size() == 0 && (g.order() == 1 || g.order() == 2);
  const std::string shape = graph_summary(g) + ", omega " + std::to_string(omega);
  c.implication("(1) omega = 1 => N_1 or N_2", omega == 1, n1_or_n2, shape);
  c.implication("(1) N_1 or N_2 => omega = 1", n1_or_n2, omega == 1, shape);
  const auto maximal = graded_maximal(a);
  const bool clique = is_clique(g, maximal);
  c.implication("(2) 1 < omega => graded maximal ideals form a finite clique", omega > 1, clique,
                std::to_string(maximal.size()) + " graded maximal ideals");
  return c.finish("commutative; omega " + std::to_string(omega), shape);
}

TheoremReport check_t3(Analysis& a) {
  Check c("t3");
  const ExtendedInt gi = girth(a.graded_graph().graph);
  c.implication("girth in {3, inf}", true, gi.is_infinite() || *gi.value == 3, "girth " + gi.to_string());
  return c.finish("none", "girth " + gi.to_string());
}

TheoremReport check_t4(Analysis& a) {
  Check c("t4");
  const Graph& g = a.graded_graph().graph;
  const ExtendedInt gi = girth(g);
  const bool not_null = g.order() == 1 || g.size() > 0;
  const bool hyp = not_null && gi.is_infinite();
  const std::string hyp_text = "Gr not null " + yes_no(not_null) + ", girth " + gi.to_string();
  if (!hyp) {
    c.vacuous("local star with centre M", hyp_text);
    c.vacuous("(1) M principal => K_1 or K_2", hyp_text);
    c.vacuous("(2) two homogeneous generators => M^2 = 0", hyp_text);
    return c.finish(hyp_text, "");
  }
  c.note("K_1 is taken as not null, since conclusion (1) allows Gr = K_1");
  const auto maximal = graded_maximal(a);
  const bool local = maximal.size() == 1;
  const ShapeFlags f = classify_shape(g);
  bool star_at_m = false;
  std::optional<std::size_t> gens;
  std::string m_label = "none";
  if (local) {
    const std::size_t m = maximal.front();
    m_label = a.graded_graph().labels[m];
    star_at_m = f.star && g.degree(m) + 1 == g.order();
    gens = min_homogeneous_generators(a.grading(), a.graded_vertices()[m], 3);
  }
  c.implication("local star with centre M", true, local && star_at_m,
                "graded local " + yes_no(local) + ", star centred at " + m_label + " " + yes_no(star_at_m));
  const std::string gens_text = gens ? std::to_string(*gens) : "more than 3";
  c.implication("M needs at most two homogeneous generators", local, gens && *gens <= 2,
                "minimal homogeneous generating set size " + gens_text);
  const bool principal = gens && *gens == 1;
  c.implication("(1) M principal => K_1 or K_2", principal, g.size() + 1 == g.order() && g.order() <= 2,
                graph_summary(g));
  bool square_zero = false;
  if (local && gens && *gens == 2) {
    const IdealSet& M = a.graded_vertices()[maximal.front()];
    square_zero = ideal_power(a.ring(), M, 2).is_zero();
  }
  c.implication("(2) two homogeneous generators => M^2 = 0", gens && *gens == 2, square_zero,
                "M = " + m_label + ", M^2 zero " + yes_no(square_zero));
  return c.finish(hyp_text, "M = " + m_label + ", generators " + gens_text);
}

TheoremReport check_lemmaB(Analysis& a) {
  Check c("lemmaB");
  const auto& gi = a.graded_ideals();
  bool ok = true;
  std::string bad;
  for (std::size_t i = 0; i < gi.size() && ok; ++i)
    for (std::size_t j = i + 1; j < gi.size() && ok; ++j) {
      const bool sum = is_graded(a.grading(), ideal_sum(a.ring(), gi[i], gi[j]));
      const bool meet = is_graded(a.grading(), ideal_intersect(gi[i], gi[j]));
      if (!sum || !meet) {
        ok = false;
        bad = gi[i].members.to_string() + ", " + gi[j].members.to_string();
      }
    }
  const std::string detail = std::to_string(gi.size()) + " graded ideals, all pairs checked";
  c.implication("I + J and I ∩ J graded", true, ok, ok ? detail : "fails at " + bad);
  return c.finish("I, J graded left ideals", detail);
}

TheoremReport check_lemma_r1(Analysis& a) {
  Check c("lemma_r1");
  const auto& v = a.graded_vertices();
  const Graph& g = a.graded_graph().graph;
  if (v.empty()) {
    c.vacuous("(1)-(3)", "hI*(R) is empty");
    return c.finish("hI*(R) empty", "");
  }
  bool p1 = true, p2 = true, p3 = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    BitSet above(v.size()), others = BitSet::full(v.size());
    others.reset(i);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i && v[i].members.is_subset_of(v[j].members)) above.set(j);
    const bool minimal = is_minimal(v[i], v), maximal = is_maximal(v[i], v);
    p1 = p1 && (minimal == (g.neighbors(i) == above));
    p2 = p2 && ((g.degree(i) == 0) == (minimal && maximal));
    p3 = p3 && (is_essential(v[i], v) == (g.neighbors(i) == others));
  }
  const std::string detail = std::to_string(v.size()) + " graded vertices";
  c.implication("(1) minimal <=> N(I) = {A : I ⊊ A}", true, p1, detail);
  c.implication("(2) isolated <=> minimal and maximal", true, p2, detail);
  c.implication("(3) essential <=> N(I) = hI* \\ {I}", true, p3, detail);
  return c.finish("I in hI*(R)", detail);
}

// ---- section 4 ----------------------------------------------------------

TheoremReport check_t100(Analysis& a) {
  Check c("t100");
  const auto& side = a.identity();
  const bool enough = side.vertices.size() >= 2;
  const bool re_connected = connectivity(side.graph.graph).connected;
  const bool hyp = enough && re_connected;
  const std::string hyp_text = "|I*(R_e)| = " + std::to_string(side.vertices.size()) + ", G(R_e) connected " +
                               yes_no(re_connected);
  if (!hyp) {
    c.vacuous("G(R_e) connected => Gr and G(R) connected", hyp_text);
    return c.finish(hyp_text, "");
  }
  const bool gr = connectivity(a.graded_graph().graph).connected;
  const bool gg = connectivity(a.ungraded_graph().graph).connected;
  c.implication("G(R_e) connected => Gr and G(R) connected", true, gr && gg,
                "Gr connected " + yes_no(gr) + ", G(R) connected " + yes_no(gg));
  c.note("\"at least two proper left ideals\" read as at least two vertices in G(R_e)");
  return c.finish(hyp_text, "Gr connected " + yes_no(gr) + ", G(R) connected " + yes_no(gg));
}

TheoremReport check_lemma51(Analysis& a) {
  Check c("lemma51");
  const auto& v = a.graded_vertices();
  const Grading& g = a.grading();
  if (v.empty()) {
    c.vacuous("sigma-faithful <=> every I meets R_sigma", "hI*(R) is empty");
    c.note("with hI* empty the right side holds for every sigma while sigma outside the support is never faithful; "
           "the argument needs R x_tau in hI*, so the empty case is excluded");
    return c.finish("hI*(R) empty", "");
  }
  std::vector<Degree> probe = g.group().elements();
  if (g.group().is_integers())
    for (Degree d = g.support().front() - 1; d <= g.support().back() + 1; ++d) probe.push_back(d);
  bool fwd_any = false, fwd_ok = true, bwd_any = false, bwd_ok = true;
  std::string faithful_list, meets_list;
  for (Degree s : probe) {
    const bool faithful = is_sigma_faithful(g, s);
    const BitSet comp = g.component(s);
    const bool meets = std::all_of(v.begin(), v.end(), [&](const IdealSet& I) {
      return I.members.intersection_count(comp) > 1;
    });
    if (faithful) {
      fwd_any = true;
      fwd_ok = fwd_ok && meets;
      faithful_list += (faithful_list.empty() ? "" : ",") + g.group().degree_name(s);
    }
    if (meets) {
      bwd_any = true;
      bwd_ok = bwd_ok && faithful;
      meets_list += (meets_list.empty() ? "" : ",") + g.group().degree_name(s);
    }
  }
  const std::string detail = "faithful at {" + faithful_list + "}, every I meets R_sigma at {" + meets_list + "}";
  c.implication("sigma-faithful => every I meets R_sigma", fwd_any, fwd_ok, detail);
  c.implication("every I meets R_sigma => sigma-faithful", bwd_any, bwd_ok, detail);
  if (g.group().is_integers()) c.note("degrees probed from min(support)-1 to max(support)+1");
  return c.finish(std::to_string(probe.size()) + " degrees probed", detail);
}

bool e_faithful(Analysis& a) { return a.classification().e_faithful; }

TheoremReport check_t1001(Analysis& a) {
  Check c("t1001");
  if (!e_faithful(a)) {
    c.vacuous("phi is a graph isomorphism", "grading not e-faithful");
    return c.finish("e-faithful: no", "");
  }
  const auto& side = a.identity();
  const auto& gr = a.graded_graph();
  try {
    const SimPartition p = sim_partition(a.grading(), side.re, gr.vertices);
    const auto clique = class_clique_violation(p, gr);
    c.implication("classes are cliques", true, !clique, clique.value_or(std::to_string(p.classes.size()) + " classes"));
    const PhiReport r = phi_iso_check(a.grading(), side, gr, PhiVariant::classes);
    c.implication("[R I_e] contains R I_e with trace I_e", true, r.traces_recovered, r.witness.value_or("all traces"));
    std::string mapping;
    for (std::size_t i = 0; i < r.mapping.size(); ++i)
      mapping += (i ? ", " : "") + r.source_labels[i] + " -> " +
                 (r.mapping[i] ? r.target_labels[*r.mapping[i]] : std::string("?"));
    c.implication("phi bijective and adjacency preserving", true, r.bijective && r.adjacency_preserved,
                  r.witness.value_or(mapping));
    return c.finish("e-faithful: yes", "phi: " + (mapping.empty() ? std::string("empty map") : mapping));
  } catch (const Error& e) {
    c.implication("quotient graph well defined", true, false, e.what());
    return c.finish("e-faithful: yes", e.what());
  }
}

TheoremReport check_conn_equiv(Analysis& a) {
  Check c("conn_equiv");
  if (!e_faithful(a)) {
    c.vacuous("G(R_e) connected <=> Gr connected", "grading not e-faithful");
    return c.finish("e-faithful: no", "");
  }
  const bool re = connectivity(a.identity().graph.graph).connected;
  const bool gr = connectivity(a.graded_graph().graph).connected;
  const std::string detail = "G(R_e) connected " + yes_no(re) + ", Gr connected " + yes_no(gr);
  c.implication("G(R_e) connected => Gr connected", re, gr, detail);
  c.implication("Gr connected => G(R_e) connected", gr, re, detail);
  return c.finish("e-faithful: yes", detail);
}

TheoremReport check_c_fields(Analysis& a) {
  Check c("c_fields");
  if (auto why = require_commutative(c, a); !why.empty() || !e_faithful(a)) {
    const std::string text = why.empty() ? "grading not e-faithful" : why;
    c.vacuous("both directions", text);
    return c.finish(text, "");
  }
  const auto& side = a.identity();
  const Grading re_trivial = trivial_grading(side.re.ring, GradeGroup::finite(FiniteGroup::cyclic(1)));
  const auto re_pair = field_pair(re_trivial, side.vertices);
  const auto r_pair = field_pair(a.grading(), a.graded_vertices());
  const std::string detail = "R_e two fields: " + re_pair.value_or("no") + "; R two graded fields: " +
                             r_pair.value_or("no");
  c.implication("R_e = F1 x F2 => R = R1 x R2 graded fields", re_pair.has_value(), r_pair.has_value(), detail);
  c.implication("R = R1 x R2 graded fields => R_e = F1 x F2", r_pair.has_value(), re_pair.has_value(), detail);
  return c.finish("commutative, e-faithful", detail);
}

TheoremReport check_gamma_eq(Analysis& a) {
  Check c("gamma_eq");
  if (!e_faithful(a)) {
    c.vacuous("gamma(G(R_e)) = gamma(Gr)", "grading not e-faithful");
    return c.finish("e-faithful: no", "");
  }
  const auto t = gamma_omega_transfer(a.grading(), a.identity(), a.graded_graph(), a.limits().graph_order);
  const std::string detail =
      "gamma(G(R_e)) = " + std::to_string(t.gamma_identity) + ", gamma(Gr) = " + std::to_string(t.gamma_graded);
  c.implication("gamma(G(R_e)) = gamma(Gr)", true, t.gamma_equal(), detail);
  return c.finish("e-faithful: yes", detail);
}

TheoremReport check_omega_formula(Analysis& a) {
  Check c("omega_formula");
  if (!e_faithful(a)) {
    c.vacuous("omega(Gr) = max sum of class sizes", "grading not e-faithful");
    return c.finish("e-faithful: no", "");
  }
  const auto t = gamma_omega_transfer(a.grading(), a.identity(), a.graded_graph(), a.limits().graph_order);
  const std::string detail = "omega(Gr) = " + std::to_string(t.omega_graded) + ", max over cliques of G(R_e) = " +
                             std::to_string(t.omega_formula.weight);
  c.implication("omega(Gr) = max over cliques C of sum |[R I_e]|", true, t.omega_equal(), detail);
  c.note("finiteness of omega and of the classes is automatic for finite rings");
  return c.finish("e-faithful: yes", detail);
}

TheoremReport check_lemma_l0(Analysis& a) {
  Check c("lemma_l0");
  if (!a.classification().first_strong) {
    c.vacuous("I = R I_e", "grading not first strong");
    return c.finish("first strong: no", "");
  }
  const auto& side = a.identity();
  bool ok = true;
  std::string bad;
  for (const auto& I : a.graded_vertices()) {
    if (!(extend_from_identity(a.ring(), side.re, trace_on_identity(side.re, I)) == I)) {
      if (ok) bad = describe_ideal(a.ring(), I, &a.grading());
      ok = false;
    }
  }
  const std::string detail = std::to_string(a.graded_vertices().size()) + " graded vertices";
  c.implication("every graded I equals R (I ∩ R_e)", true, ok, ok ? detail : "fails at " + bad);
  return c.finish("first strong: yes", detail);
}

TheoremReport check_t56(Analysis& a) {
  Check c("t56");
  if (!a.classification().first_strong) {
    c.vacuous("G(R_e) ≅ Gr via I_e -> R I_e", "grading not first strong");
    return c.finish("first strong: no", "");
  }
  const PhiReport r = phi_iso_check(a.grading(), a.identity(), a.graded_graph(), PhiVariant::direct);
  std::string mapping;
  for (std::size_t i = 0; i < r.mapping.size(); ++i)
    mapping += (i ? ", " : "") + r.source_labels[i] + " -> " +
               (r.mapping[i] ? r.target_labels[*r.mapping[i]] : std::string("?"));
  c.implication("G(R_e) ≅ Gr via I_e -> R I_e", true, r.ok(), r.witness.value_or(mapping.empty() ? "empty map" : mapping));
  return c.finish("first strong: yes", mapping.empty() ? "both graphs empty" : mapping);
}

TheoremReport check_group_ring_example(Analysis& a) {
  Check c("group_ring_example");
  const bool strong = a.classification().strong;
  c.implication("R[G] strongly graded", true, strong, "strong " + yes_no(strong));
  const RingPtr& base = a.ring().construction().parts.front();
  const auto base_vertices = nontrivial_proper(enumerate_left_ideals(*base, a.limits().ideal_count));
  const auto base_graph = build_intersection_graph(*base, base_vertices);
  const PhiReport r = phi_iso_check(a.grading(), a.identity(), a.graded_graph(), PhiVariant::direct);
  const Graph& gr = a.graded_graph().graph;
  const bool same_shape = base_graph.graph.order() == gr.order() && base_graph.graph.size() == gr.size() &&
                          base_graph.graph.degree_sequence() == gr.degree_sequence();
  const std::string detail = "G(" + base->description() + "): " + graph_summary(base_graph.graph) + "; Gr: " +
                             graph_summary(gr);
  c.implication("Gr_G(R[G]) ≅ G(R)", strong, r.ok() && same_shape, r.witness.value_or(detail));
  return c.finish("group ring with its canonical grading", detail);
}

// ---- section 5 ----------------------------------------------------------

struct IdealizationParts {
  const FiniteRing* base;
  const FiniteModule* module;
  std::vector<IdealSet> base_ideals;
  std::vector<BitSet> submodules;
};

IdealizationParts idealization_parts(Analysis& a) {
  const auto& con = a.ring().construction();
  IdealizationParts p{con.parts.front().get(), con.module.get(), {}, {}};
  p.base_ideals = enumerate_left_ideals(*p.base, a.limits().ideal_count);
  p.submodules = enumerate_submodules(*p.module, a.limits().ideal_count);
  return p;
}

/// (I, N) with J = I(+)N read off the coordinates; index (r, m) = r |M| + m.
std::pair<BitSet, BitSet> split_idealization(const IdealizationParts& p, const IdealSet& J) {
  const std::size_t ms = p.module->size();
  BitSet I(p.base->size()), N(ms);
  J.members.for_each([&](std::size_t x) {
    const std::size_t r = x / ms, m = x % ms;
    if (m == p.module->zero()) I.set(r);
    if (r == p.base->zero()) N.set(m);
  });
  return {I, N};
}

BitSet join_idealization(const IdealizationParts& p, const BitSet& I, const BitSet& N) {
  const std::size_t ms = p.module->size();
  BitSet out(p.base->size() * ms);
  I.for_each([&](std::size_t r) { N.for_each([&](std::size_t m) { out.set(r * ms + m); }); });
  return out;
}

TheoremReport check_lemma17(Analysis& a) {
  Check c("lemma17");
  const auto p = idealization_parts(a);
  const auto& graded = a.graded_ideals();
  const FiniteModule& M = *p.module;

  bool form_ok = true;
  std::string bad;
  for (const auto& J : graded) {
    auto [I, N] = split_idealization(p, J);
    bool ok = join_idealization(p, I, N) == J.members && is_left_ideal(*p.base, I) &&
              std::find(p.submodules.begin(), p.submodules.end(), N) != p.submodules.end();
    I.for_each([&](std::size_t i) {
      for (Elem m = 0; m < M.size(); ++m) ok = ok && N.test(M.act(static_cast<Elem>(i), m));
    });
    if (!ok && form_ok) bad = J.members.to_string();
    form_ok = form_ok && ok;
  }
  // Conversely every admissible pair gives a graded ideal.
  std::size_t admissible = 0;
  for (const auto& I : p.base_ideals)
    for (const auto& N : p.submodules) {
      bool ok = true;
      I.members.for_each([&](std::size_t i) {
        for (Elem m = 0; m < M.size(); ++m) ok = ok && N.test(M.act(static_cast<Elem>(i), m));
      });
      if (ok) ++admissible;
    }
  const std::string count = std::to_string(graded.size()) + " graded ideals, " + std::to_string(admissible) +
                            " pairs (I, N) with IM ⊆ N";
  c.implication("(1) graded ideals are exactly I(+)N with IM ⊆ N", true, form_ok && admissible == graded.size(),
                form_ok ? count : "not of the form I(+)N: " + bad);

  bool meet_ok = true;
  for (std::size_t i = 0; i < graded.size(); ++i)
    for (std::size_t j = i + 1; j < graded.size(); ++j) {
      const auto [I1, N1] = split_idealization(p, graded[i]);
      const auto [I2, N2] = split_idealization(p, graded[j]);
      meet_ok = meet_ok && (graded[i].members & graded[j].members) == join_idealization(p, I1 & I2, N1 & N2);
    }
  c.implication("(2) (I1(+)N1) ∩ (I2(+)N2) = (I1 ∩ I2)(+)(N1 ∩ N2)", true, meet_ok,
                std::to_string(graded.size() * (graded.size() - 1) / 2) + " pairs");
  return c.finish("idealization with its C_2 grading", count);
}

TheoremReport check_t777(Analysis& a) {
  Check c("t777");
  const auto p = idealization_parts(a);
  const Graph& g = a.graded_graph().graph;
  const bool field = p.base_ideals.size() == 2;
  const bool simple = p.submodules.size() == 2;
  const bool edgeless = g.size() == 0;
  const ExtendedInt gi = girth(g);
  const bool girth3 = gi == ExtendedInt::finite(3);
  const std::string detail = "base field " + yes_no(field) + ", M simple " + yes_no(simple) + ", " + graph_summary(g) +
                             ", girth " + gi.to_string();
  c.implication("(1) Gr edgeless => R field and M simple", edgeless, field && simple, detail);
  c.implication("(1) R field and M simple => Gr edgeless", field && simple, edgeless, detail);
  c.note("(1) is checked in edgeless form: a one-vertex graph counts as connected here");
  c.note("the proof's remark that R(+)0 is graded when Ann_R(M) = 0 conflicts with IM ⊆ N; the graded ideal list "
         "follows the IM ⊆ N criterion");
  c.implication("(2)(i) R and M not simple => girth 3", !field && !simple, girth3, detail);
  const std::size_t base_vertices = p.base_ideals.size() - 2;
  c.implication("(2)(ii) |G(R)| >= 2 => girth 3", base_vertices >= 2, girth3,
                "|G(R)| = " + std::to_string(base_vertices) + ", girth " + gi.to_string());
  // RM is the additive span of all r m; with a unital action it is M.
  BitSet rm(p.module->size());
  for (Elem r = 0; r < p.base->size(); ++r)
    for (Elem m = 0; m < p.module->size(); ++m) rm.set(p.module->act(r, m));
  const bool rm_proper = rm.count() != p.module->size();
  c.implication("(2)(iii) RM != M => girth 3", rm_proper, girth3, "|RM| = " + std::to_string(rm.count()));
  c.note("(2)(iii) cannot hold for a unital module; the proof text reads RM != 0 instead");
  return c.finish("idealization with its C_2 grading", detail);
}

TheoremReport check_c777(Analysis& a) {
  Check c("c777");
  const auto p = idealization_parts(a);
  const Graph& g = a.graded_graph().graph;
  const bool not_simple = p.base_ideals.size() > 2;
  const bool has_edge = g.size() > 0;
  const bool girth3 = girth(g) == ExtendedInt::finite(3);
  const std::string detail = "R not simple " + yes_no(not_simple) + ", Gr has an edge " + yes_no(has_edge) +
                             ", girth " + girth(g).to_string();
  c.implication("Gr has an edge => R not simple", has_edge, not_simple, detail);
  c.implication("R not simple => Gr has an edge", not_simple, has_edge, detail);
  c.implication("R not simple => girth 3", not_simple, girth3, detail);
  c.implication("girth 3 => R not simple", girth3, not_simple, detail);
  c.note("connected is read as having an edge, as in the edgeless form of the disconnection criterion");
  return c.finish("R(+)R", detail);
}

TheoremReport check_t231(Analysis& a) {
  Check c("t231");
  const auto p = idealization_parts(a);
  const auto base_graph = build_intersection_graph(*p.base, nontrivial_proper(p.base_ideals));
  const auto cap = a.limits().graph_order;
  const std::size_t omega_base = clique_number(base_graph.graph, cap);
  const std::size_t order_base = base_graph.graph.order();
  const std::size_t omega = clique_number(a.graded_graph().graph, cap);
  const std::size_t bound = 1 + 2 * omega_base + order_base;
  const bool base_null = base_graph.graph.size() == 0;
  const std::string detail = "omega(Gr) = " + std::to_string(omega) + ", 1 + 2 omega(G(R)) + |G(R)| = " +
                             std::to_string(bound) + ", G(R) null " + yes_no(base_null);
  c.implication("(2) omega(Gr) >= 1 + 2 omega(G(R)) + |G(R)|", true, omega >= bound, detail);
  c.implication("(2) equality => G(R) null", omega == bound, base_null, detail);
  c.implication("(2) G(R) null => equality", base_null, omega == bound, detail);
  c.note("(1) concerns infinite G(R) and does not apply");
  return c.finish("R(+)R, |G(R)| finite", detail);
}

TheoremReport check_planarity_cor(Analysis& a) {
  Check c("planarity_cor");
  const auto p = idealization_parts(a);
  const std::size_t nontrivial = p.base_ideals.size() - 2;
  const Planarity planar = is_planar(a.graded_graph().graph, a.limits().graph_order);
  const std::string detail = "proper nontrivial ideals of R: " + std::to_string(nontrivial) + ", planar " +
                             to_string(planar);
  if (planar == Planarity::unknown) {
    c.vacuous("planar <=> at most one proper nontrivial ideal", detail);
    return c.finish("R(+)R", detail);
  }
  const bool is_planar_graph = planar == Planarity::planar;
  c.implication("planar => at most one proper nontrivial ideal", is_planar_graph, nontrivial <= 1, detail);
  c.implication("at most one proper nontrivial ideal => planar", nontrivial <= 1, is_planar_graph, detail);
  return c.finish("R(+)R", detail);
}

// ---- section 6 ----------------------------------------------------------

TheoremReport check_lemma_ll(Analysis& a) {
  Check c("lemma_ll");
  const LemmaLLReport r = lemma_ll_check(a.grading(), a.all_ideals());
  const std::string detail = std::to_string(r.ideals_checked) + " ideals, " + std::to_string(r.nested_pairs_checked) +
                             " nested pairs";
  const std::string w = r.witness.value_or(detail);
  c.implication("(1) I = I~ <=> I graded", true, r.part1, w);
  c.implication("(2) I~ = 0 <=> I = 0", true, r.part2, w);
  c.implication("(3) I ⊆ J => I~ ⊆ J~", true, r.part3, w);
  c.implication("(4) I ⊆ J: I = J <=> I~ = J~", true, r.part4, w);
  c.implication("(I~)~ = I~", true, r.idempotent, w);
  return c.finish("Z-grading with finite support", detail);
}

TheoremReport check_t543(Analysis& a) {
  Check c("t543");
  const OrderedComparison o = ordered_comparison_check(a.grading(), a.all_ideals(), a.graded_ideals());
  const std::string detail =
      "Gr connected " + yes_no(o.graded_connected) + ", G(R) connected " + yes_no(o.ungraded_connected);
  c.implication("Gr connected => G(R) connected", o.graded_connected, o.ungraded_connected, detail);
  c.implication("G(R) connected => Gr connected", o.ungraded_connected, o.graded_connected, detail);
  return c.finish("Z-grading with finite support", detail);
}

TheoremReport check_t544(Analysis& a) {
  Check c("t544");
  const OrderedComparison o = ordered_comparison_check(a.grading(), a.all_ideals(), a.graded_ideals());
  const std::string detail = "local " + yes_no(o.local) + ", girth(Gr) " + o.graded_girth.to_string() +
                             ", girth(G(R)) " + o.ungraded_girth.to_string();
  c.implication("R local => girth(Gr) = girth(G(R))", o.local, o.graded_girth == o.ungraded_girth, detail);
  return c.finish("Z-grading with finite support; local " + yes_no(o.local), detail);
}

TheoremReport check_r545(Analysis& a) {
  Check c("r545");
  const OrderedComparison o = ordered_comparison_check(a.grading(), a.all_ideals(), a.graded_ideals());
  std::string chains;
  for (const auto& [len, count] : o.chain_lengths)
    chains += (chains.empty() ? "" : ", ") + std::to_string(count) + " of length " + std::to_string(len);
  const std::string hyp = "girth(Gr) " + o.graded_girth.to_string() + ", girth(G(R)) " + o.ungraded_girth.to_string();
  const std::string detail = "maximal chains: " + chains;
  c.implication("(1) M maximal among all proper left ideals", o.remark_triggered, o.item1.value_or(false), hyp);
  c.implication("(2) K~ = M for every maximal K", o.remark_triggered, o.item2.value_or(false), hyp);
  c.implication("(3) every maximal chain has four terms", o.remark_triggered, o.item3.value_or(false), detail);
  c.note("chain length counts the terms {0} ⊊ A ⊊ B ⊊ R as four");
  if (o.witness) c.witness(*o.witness);
  return c.finish(hyp, detail);
}

struct Entry {
  TheoremInfo info;
  std::function<TheoremReport(Analysis&)> run;
};

const std::vector<Entry>& entries() {
  using R = InstanceRequirement;
  static const std::vector<Entry> list = {
      {{"t1", "none", "Gr disconnected <=> Gr = N_n, n >= 2", R::any}, check_t1},
      {{"c1", "Gr disconnected", ">= 2 graded minimal; graded ideals principal, minimal, maximal", R::any}, check_c1},
      {{"c11", "R commutative", "Gr disconnected <=> R = R1 x R2 graded fields", R::any}, check_c11},
      {{"c101", "R commutative, Gr connected", "graded maximal ideals pairwise meet", R::any}, check_c101},
      {{"t2", "Gr connected", "diam(Gr) <= 2", R::any}, check_t2},
      {{"t51", "R commutative", "graded domain <=> graded reduced and Gr complete", R::any}, check_t51},
      {{"t52", "Gr not null", "regular <=> unique graded minimal <=> complete", R::any}, check_t52},
      {{"t6", "R commutative", "gamma <= 2; indecomposable => 1; gamma(S x T) = 2 <=> both 2", R::any}, check_t6},
      {{"l18", "omega(Gr) finite", "graded Artinian: graded chains are cliques", R::any}, check_l18},
      {{"l187", "R commutative", "omega = 1 <=> N_1 or N_2; 1 < omega => maximal ideals form a clique", R::any},
       check_l187},
      {{"t3", "none", "girth(Gr) in {3, inf}", R::any}, check_t3},
      {{"t4", "Gr not null, girth inf", "graded local star centred at M; M principal or M^2 = 0", R::any}, check_t4},
      {{"lemmaB", "I, J graded", "I + J and I ∩ J graded", R::any}, check_lemmaB},
      {{"lemma_r1", "I in hI*", "minimal, isolated and essential via neighbourhoods", R::any}, check_lemma_r1},
      {{"t100", "|I*(R_e)| >= 2, G(R_e) connected", "Gr and G(R) connected", R::any}, check_t100},
      {{"lemma51", "hI* nonempty", "sigma-faithful <=> every I meets R_sigma", R::any}, check_lemma51},
      {{"t1001", "e-faithful", "G(R_e) ≅ Gr_e(R) via I_e -> [R I_e]", R::any}, check_t1001},
      {{"conn_equiv", "e-faithful", "G(R_e) connected <=> Gr connected", R::any}, check_conn_equiv},
      {{"c_fields", "e-faithful, commutative", "R_e two fields <=> R two graded fields", R::any}, check_c_fields},
      {{"gamma_eq", "e-faithful", "gamma(G(R_e)) = gamma(Gr)", R::any}, check_gamma_eq},
      {{"omega_formula", "e-faithful", "omega(Gr) = max over cliques of class sizes", R::any}, check_omega_formula},
      {{"lemma_l0", "first strong", "I = R I_e for every graded I", R::any}, check_lemma_l0},
      {{"t56", "first strong", "G(R_e) ≅ Gr", R::any}, check_t56},
      {{"group_ring_example", "group ring R[G]", "strong grading and Gr_G(R[G]) ≅ G(R)", R::group_ring},
       check_group_ring_example},
      {{"lemma17", "idealization", "graded ideals are I(+)N with IM ⊆ N; intersections split", R::idealization},
       check_lemma17},
      {{"t777", "idealization", "edgeless <=> field and simple; girth 3 criteria", R::idealization}, check_t777},
      {{"c777", "R(+)R", "has an edge <=> R not simple <=> girth 3", R::self_idealization}, check_c777},
      {{"t231", "R(+)R", "omega >= 1 + 2 omega(G(R)) + |G(R)|, equality <=> G(R) null", R::self_idealization},
       check_t231},
      {{"planarity_cor", "R(+)R", "planar <=> at most one proper nontrivial ideal", R::self_idealization},
       check_planarity_cor},
      {{"lemma_ll", "Z-grading", "leading ideal properties (1)-(4)", R::integer_grading}, check_lemma_ll},
      {{"t543", "Z-grading", "Gr connected <=> G(R) connected", R::integer_grading}, check_t543},
      {{"t544", "Z-grading, R local", "girth(Gr) = girth(G(R))", R::integer_grading}, check_t544},
      {{"r545", "Z-grading, girth(Gr) inf, girth(G(R)) 3", "M maximal; K~ = M; chains of four terms",
        R::integer_grading},
       check_r545},
  };
  return list;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw Error(ErrorKind::UnknownTheorem, "no check registered as '" + id + "'");
}

std::string requirement_text(InstanceRequirement r) {
  switch (r) {
    case InstanceRequirement::any:
      return "any instance";
    case InstanceRequirement::idealization:
      return "an idealization with its C_2 grading";
    case InstanceRequirement::self_idealization:
      return "an idealization R(+)R with its C_2 grading";
    case InstanceRequirement::group_ring:
      return "a group ring with its canonical grading";
    case InstanceRequirement::integer_grading:
      break;
  }
  return "a Z-grading";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::vacuous:
      return "VACUOUS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skipped:
      break;
  }
  return "SKIPPED";
}

bool applies_to(InstanceRequirement requirement, const Grading& g) {
  switch (requirement) {
    case InstanceRequirement::any:
      return true;
    case InstanceRequirement::idealization:
      return is_idealization_instance(g);
    case InstanceRequirement::self_idealization:
      return is_self_idealization_instance(g);
    case InstanceRequirement::group_ring:
      return is_group_ring_instance(g);
    case InstanceRequirement::integer_grading:
      break;
  }
  return is_integer_instance(g);
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& theorem_info(const std::string& id) { return find_entry(id).info; }

TheoremReport run_check(const std::string& id, Analysis& analysis) {
  const Entry& e = find_entry(id);
  if (!applies_to(e.info.requirement, analysis.grading()))
    throw Error(ErrorKind::WrongInstanceKind, "'" + id + "' needs " + requirement_text(e.info.requirement));
  return e.run(analysis);
}

std::vector<TheoremReport> run_all(Analysis& analysis) {
  std::vector<TheoremReport> out;
  for (const auto& e : entries()) {
    if (!applies_to(e.info.requirement, analysis.grading())) {
      TheoremReport r;
      r.id = e.info.id;
      r.verdict = Verdict::skipped;
      r.hypothesis_details = "needs " + requirement_text(e.info.requirement);
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(e.run(analysis));
  }
  return out;
}

}  // namespace grgraph
