#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grgraph/constructions.hpp"
#include "grgraph/grading.hpp"
#include "grgraph/graph.hpp"
#include "grgraph/ideals.hpp"

namespace grgraph {

/// R_e as a ring of its own, with the embedding into R.
Subring identity_component_ring(const Grading& g);

/// R_e together with G(R_e).
struct IdentitySide {
  Subring re;
  std::vector<IdealSet> vertices;  // nontrivial proper left ideals of R_e, R_e indices
  IntersectionGraph graph;
};
IdentitySide identity_side(const Grading& g, std::size_t ideal_limit = kDefaultIdealCap);

/// I ∩ R_e, in R_e indices.
IdealSet trace_on_identity(const Subring& re, const IdealSet& ideal);
/// R I_e, in R indices.
IdealSet extend_from_identity(const FiniteRing& ring, const Subring& re, const IdealSet& ideal_e);

/// Classes of I ~ J iff I ∩ R_e = J ∩ R_e over the vertices of Gr_G(R).
struct SimPartition {
  std::vector<IdealSet> keys;                     // traces, R_e indices, canonical order
  std::vector<std::vector<std::size_t>> classes;  // graded vertex indices per key
  std::vector<std::size_t> class_of;              // graded vertex -> class
};
/// Throws NotEFaithful when the grading is not e-faithful or a vertex has
/// zero trace.
SimPartition sim_partition(const Grading& g, const Subring& re, const std::vector<IdealSet>& graded_vertices);

/// First pair inside one class that is not adjacent in `gr`, as text.
std::optional<std::string> class_clique_violation(const SimPartition& p, const IntersectionGraph& gr);

/// Gr_e(R). Adjacency comes from the first members of two classes and every
/// other pair must agree, else WellDefinednessViolation.
IntersectionGraph quotient_graph(const SimPartition& p, const IntersectionGraph& gr);

/// classes: I_e -> [R I_e] in Gr_e(R). direct: I_e -> R I_e in Gr_G(R).
enum class PhiVariant { classes, direct };

struct PhiReport {
  PhiVariant variant = PhiVariant::classes;
  /// mapping[i] is the target vertex of G(R_e) vertex i, if R I_e is a vertex.
  std::vector<std::optional<std::size_t>> mapping;
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  bool traces_recovered = true;  // (R I_e) ∩ R_e = I_e for every I_e
  bool bijective = false;
  bool adjacency_preserved = false;
  std::optional<std::string> witness;

  bool ok() const { return traces_recovered && bijective && adjacency_preserved; }
};

/// Checks the explicit correspondence vertex by vertex and edge by edge in
/// both directions. The classes variant throws NotEFaithful on a grading
/// that is not e-faithful; violations are reported in the result.
PhiReport phi_iso_check(const Grading& g, const IdentitySide& side, const IntersectionGraph& gr, PhiVariant variant);

struct TransferReport {
  std::size_t gamma_identity = 0;  // gamma(G(R_e))
  std::size_t gamma_graded = 0;    // gamma(Gr_G(R))
  std::size_t omega_graded = 0;    // omega(Gr_G(R))
  WeightedClique omega_formula;    // max over cliques C of G(R_e) of sum |[R I_e]|

  bool gamma_equal() const { return gamma_identity == gamma_graded; }
  bool omega_equal() const { return omega_graded == omega_formula.weight; }
};

/// Throws NotEFaithful.
TransferReport gamma_omega_transfer(const Grading& g, const IdentitySide& side, const IntersectionGraph& gr,
                                    std::size_t cap = 64);

}  // namespace grgraph
