#pragma once

#include <cstdint>
#include <string>

#include "triflow/multigraph.hpp"

namespace triflow {

/// Canonical encoding of the unlabeled multigraph underlying g: the
/// lexicographically greatest row encoding over all vertex orderings
/// (row k = multiplicities towards positions 0..k-1). Equal strings iff
/// isomorphic. Brute-force with pruning; meant for small graphs (n <= 12).
std::string canonical_string(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

/// 64-bit FNV-1a over the canonical string, as 16 hex chars.
std::string fingerprint(const Multigraph& g);

}  // namespace triflow
