#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "rph/robust_paths.hpp"

namespace rph {

// Which construction produced the site, relative to the canonical
// triangulating pairs of the two triangles of the source 3-path.
enum class BraessCase { Case1, Case2a, Case2b };

std::string_view to_string(BraessCase c);

struct BraessSite {
  std::array<VertexIndex, 4> tuple;
  VertexPath source_path;
  BraessCase case_label = BraessCase::Case1;
  bool verified = false;
  TriangleWitness first;   // witness of (i0, i1, i2)
  TriangleWitness second;  // witness of (i1, i2, i3)
};

// One site per distinct tuple, in order of the first robust 3-path producing it.
// Sites that fail verify_braess_embedding are kept with verified = false.
std::vector<BraessSite> braess_sites(const ColoredRouteSimplex& simplex,
                                     TriangleSemantics semantics = TriangleSemantics::Literal);

// True iff the dag contains directed paths t0->t1, t0->t2, t1->t2, t1->t3 and
// t2->t3 whose interiors are pairwise disjoint and avoid the tuple, i.e. a
// subdivision of the Wheatstone pattern with the tuple as branch vertices.
// Exhaustive search. Throws GraphError(InvalidInput) unless the four vertices
// are distinct vertices of the dag.
bool verify_braess_embedding(const TwoTerminalDag& dag, const std::array<VertexIndex, 4>& tuple);

}  // namespace rph
