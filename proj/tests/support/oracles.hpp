#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grgraph/analysis.hpp"

// Brute-force references. Nothing here calls the enumeration or graph
// algorithms under test; only ring tables, grading components and adjacency
// are read.
namespace oracle {

using grgraph::BitSet;
using grgraph::FiniteRing;
using grgraph::Graph;
using grgraph::Grading;

/// Every subset closed under addition that absorbs left multiplication.
/// Rings up to 16 elements scan all 2^(n-1) subsets containing zero; larger
/// ones close I + {x} by fixpoint iteration from {0}.
std::vector<BitSet> left_ideals(const FiniteRing& ring);

/// I = (+)_sigma (I ∩ R_sigma), tested as |I| = prod |I ∩ R_sigma|.
bool graded(const Grading& g, const BitSet& ideal);

std::vector<BitSet> graded_left_ideals(const Grading& g);

/// Largest clique by scanning every vertex subset. order <= 20.
std::size_t clique_number(const Graph& g);
/// Smallest dominating set by scanning every vertex subset.
std::size_t domination_number(const Graph& g);
/// Shortest cycle by depth-first search over simple paths; 0 when acyclic.
std::size_t girth(const Graph& g);
/// Floyd-Warshall; 0 for at most one vertex and SIZE_MAX when disconnected.
std::size_t diameter(const Graph& g);

/// Adjacency straight from the definition over an explicit family.
Graph intersection_graph(const std::vector<BitSet>& family);

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
Graph cube();
Graph octahedron();
Graph random_graph(std::size_t n, double p, unsigned seed);

std::filesystem::path corpus_dir();
grgraph::Instance corpus(const std::string& stem);
std::vector<std::filesystem::path> corpus_files();

}  // namespace oracle
