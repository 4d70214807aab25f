#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grgraph/grading.hpp"
#include "grgraph/graph.hpp"
#include "grgraph/ideals.hpp"
#include "grgraph/ring.hpp"
#include "grgraph/structure_maps.hpp"

namespace grgraph {

/// A ring with a grading and the caps that apply to it.
struct Instance {
  std::string name;
  Grading grading;
  Limits limits;

  const FiniteRing& ring() const { return grading.ring(); }
};

/// Lazily computed, cached views of one instance. Not thread-safe; use one
/// Analysis per thread.
class Analysis {
 public:
  explicit Analysis(Instance instance);

  const Instance& instance() const { return instance_; }
  const FiniteRing& ring() const { return instance_.ring(); }
  const Grading& grading() const { return instance_.grading; }
  const Limits& limits() const { return instance_.limits; }

  /// Every left ideal, {0} and R included, canonical order.
  const std::vector<IdealSet>& all_ideals();
  /// Every graded left ideal, {0} and R included, canonical order.
  const std::vector<IdealSet>& graded_ideals();
  /// I*(R) and hI*(R).
  const std::vector<IdealSet>& all_vertices();
  const std::vector<IdealSet>& graded_vertices();

  /// G(R) and Gr_G(R).
  const IntersectionGraph& ungraded_graph();
  const IntersectionGraph& graded_graph();
  const GraphInvariants& graded_invariants();

  /// R_e and G(R_e).
  const IdentitySide& identity();
  const GradingClassification& classification();

 private:
  Instance instance_;
  std::optional<std::vector<IdealSet>> all_ideals_, graded_ideals_, all_vertices_, graded_vertices_;
  std::optional<IntersectionGraph> ungraded_graph_, graded_graph_;
  std::optional<GraphInvariants> graded_invariants_;
  std::optional<IdentitySide> identity_;
  std::optional<GradingClassification> classification_;
};

/// A two-sided ideal I that has its own identity element, as a ring with the
/// induced grading I_sigma = I ∩ R_sigma. nullopt when I has no identity or
/// the induced decomposition is not a grading.
std::optional<Grading> graded_factor(const Grading& g, const IdealSet& ideal);

/// Submodules of M, zero and M included, canonical order.
std::vector<BitSet> enumerate_submodules(const FiniteModule& m, std::size_t limit = kDefaultIdealCap);

/// Instance shape predicates used to decide which checks apply.
bool is_idealization_instance(const Grading& g);
/// Idealization R(+)R with R acting on itself by multiplication.
bool is_self_idealization_instance(const Grading& g);
bool is_group_ring_instance(const Grading& g);
bool is_integer_instance(const Grading& g);

}  // namespace grgraph
