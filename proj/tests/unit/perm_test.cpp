// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "tw3/perm.hpp"

using namespace tw3;

TEST_SUITE("perm") {
  TEST_CASE("identity and validity") {
    CHECK(perm_identity(3) == Perm{1, 2, 3});
    CHECK(perm_is_identity(perm_identity(0)));
    CHECK(perm_valid(Perm{2, 3, 1}));
    CHECK_FALSE(perm_valid(Perm{1, 1, 2}));
    CHECK_FALSE(perm_valid(Perm{0, 1}));
  }

  TEST_CASE("composition applies the right factor first") {
    Perm p{2, 3, 1}, q = perm_swap(3, 1, 2);
    // (p o q)(1) = p(q(1)) = p(2) = 3
    CHECK(perm_compose(p, q)[0] == 3);
    CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(3));
  }

  TEST_CASE("cycles map each point to the next") {
    CHECK(perm_from_cycles(4, {{1, 2, 4}}) == Perm{2, 4, 3, 1});
    CHECK(perm_from_cycles(4, {{1, 4}}) == perm_swap(4, 1, 4));
    CHECK(perm_from_cycles(3, {}) == perm_identity(3));
  }

  TEST_CASE("extension fixes the new point") {
    CHECK(perm_extend(Perm{2, 1}) == Perm{2, 1, 3});
  }

  TEST_CASE("enumeration") {
    CHECK(perm_all(0).size() == 1);
    CHECK(perm_all(4).size() == 24);
    CHECK(perm_to_string(Perm{3, 1, 2}) == "[3,1,2]");
  }

  TEST_CASE("inverse is an involution over all of S4") {
    for (const Perm& p : perm_all(4)) {
      CHECK(perm_inverse(perm_inverse(p)) == p);
      CHECK(perm_compose(perm_inverse(p), p) == perm_identity(4));
    }
  }
}
