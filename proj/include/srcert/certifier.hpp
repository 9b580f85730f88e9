// Copyright 2026 The srcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Searches that produce certificates. Table subjects are searched
// exhaustively (up to a subset cap); symbolic subjects use per-archetype
// rules or verify a supplied witness.

#include <cstddef>
#include <vector>

#include "srcert/certificate.hpp"
#include "srcert/structure.hpp"
#include "srcert/types.hpp"

namespace srcert {

// SRCERT_CAP from the environment, else 65536.
std::size_t default_cap();

struct SearchOptions {
  std::size_t cap = default_cap();
  Exec exec = default_exec();
  // Longest list returned by find_all.
  std::size_t limit = 64;
};

// When `given` holds every witness role the witness is only verified; a
// rejected witness gives holds = false with complete_search = false. Input
// roles (the subset under test) must be supplied. NeedsWitness when a symbolic
// subject has no rule for the property.
Certificate certify(const Subject& s, Property p, const Parts& given = {}, const SearchOptions& opts = {});

// Every witness tuple of an element-level property, lexicographic in the role
// order, at most opts.limit of them. Table subjects only.
std::vector<Certificate> find_all(const Subject& s, Property p, const SearchOptions& opts = {});

// Commutative, unital, strict and zero-divisor free. Witness: the first
// failing pair, or empty when there is no one.
Verdict is_semifield(const Structure& s);
// Semifield without a proper subsemifield. Witness: members of the
// preferred proper subsemifield.
Verdict is_prime_semifield(const Structure& s, const SearchOptions& opts = {});

// Exit status of a certify run: 0 holds, 1 refuted by a complete search,
// 2 not found by an incomplete search.
int exit_code(const Certificate& c);

}  // namespace srcert
