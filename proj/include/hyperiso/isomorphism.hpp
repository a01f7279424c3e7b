#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperiso/hypergraph.hpp"

namespace hyperiso {

/// Searches for a vertex bijection mapping E(a) onto E(b); returns the map
/// (map[v-1] = image of v) if one exists. Backtracking with degree pruning;
/// intended for small instances (n up to ~13).
std::optional<std::vector<int>> isomorphism_mapping(const Hypergraph& a, const Hypergraph& b);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Canonical byte string: equal for isomorphic hypergraphs, distinct
/// otherwise. Defined as the lexicographically minimal edge-set encoding
/// over all vertex relabelings, with degree-class refinement pruning.
/// Exact; intended for n up to ~10.
std::string canonical_form(const Hypergraph& h);

/// The canonically relabeled copy realizing canonical_form.
Hypergraph canonical_copy(const Hypergraph& h);

/// True iff h equals its own canonical relabeling. Lets exhaustive labeled
/// enumeration emit each isomorphism class exactly once with no shared
/// dedup state.
bool is_canonical_representative(const Hypergraph& h);

}  // namespace hyperiso
