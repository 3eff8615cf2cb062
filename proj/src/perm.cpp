// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/perm.hpp"

#include <algorithm>
#include <numeric>

#include "tw3/errors.hpp"

namespace tw3 {

Perm perm_identity(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InputError("permutation degree mismatch in composition");
  Perm r(p.size());
  for (size_t j = 0; j < q.size(); ++j) r[j] = p[q[j] - 1];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[p[j] - 1] = static_cast<int>(j) + 1;
  return r;
}

Perm perm_swap(int k, int i, int j) {
  Perm p = perm_identity(k);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

Perm perm_extend(const Perm& p) {
  Perm r = p;
  r.push_back(static_cast<int>(p.size()) + 1);
  return r;
}

Perm perm_from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(k);
  std::vector<bool> used(k + 1, false);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1 || v > k) throw InputError("cycle entry " + std::to_string(v) + " out of range 1.." + std::to_string(k));
      if (used[v]) throw InputError("cycle entry " + std::to_string(v) + " repeated");
      used[v] = true;
    }
    for (size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()];
  }
  return p;
}

std::vector<Perm> perm_all(int k) {
  std::vector<Perm> out;
  Perm p = perm_identity(k);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_to_string(const Perm& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace tw3
