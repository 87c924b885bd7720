#pragma once

#include "percolab/graph.hpp"

namespace percolab {

// Global transitivity: 3 * triangles / connected triples.  Self-loops and
// parallel edges are ignored internally; returns 0 when there are no
// connected triples.
double clustering_coefficient(const Graph& g);

}  // namespace percolab
