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

#include "srcert/types.hpp"

#include <algorithm>
#include <bit>

#include "srcert/error.hpp"

namespace srcert {

Exec default_exec() noexcept {
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::from(std::size_t universe, std::span<const Index> members) {
  ElementSet s(universe);
  for (Index i : members) s.insert(i);
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
  return s;
}

void ElementSet::insert(Index i) {
  if (i >= universe_) {
    throw Error(ErrorCode::invalid_argument,
                "element " + std::to_string(i) + " outside universe of size " + std::to_string(universe_));
  }
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void ElementSet::erase(Index i) {
  if (i < universe_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Index> ElementSet::elements() const {
  std::vector<Index> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
  if (other.universe_ != universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9E3779B97F4A7C15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace srcert
