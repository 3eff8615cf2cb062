// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace tw3 {

/// Permutation of [1,k] as an image list: p[j-1] = p(j).
/// Applied to an interface, the source at position j moves to position p(j).
using Perm = std::vector<int>;

Perm perm_identity(int k);
bool perm_is_identity(const Perm& p);
bool perm_valid(const Perm& p);
/// (p o q)(j) = p(q(j)).
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
/// Transposition of i and j (1-based) in degree k.
Perm perm_swap(int k, int i, int j);
/// Extension to [1,k+1] fixing the last element.
Perm perm_extend(const Perm& p);
/// Cycles given as lists of 1-based points; degree k.
Perm perm_from_cycles(int k, const std::vector<std::vector<int>>& cycles);
/// All permutations of degree k in lexicographic order.
std::vector<Perm> perm_all(int k);
std::string perm_to_string(const Perm& p);

}  // namespace tw3
