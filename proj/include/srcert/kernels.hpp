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

// Data-parallel scan kernels. Every kernel has a plain serial version that is
// the reference for tests and an OpenMP version that must return the same
// answer. Predicates and mappers run concurrently in the OpenMP version and
// must not throw.

#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "srcert/types.hpp"

namespace srcert::kernels {

namespace serial {

template <class Pred>
std::optional<std::size_t> first_index(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace omp {

// Lowest index satisfying pred. Indices above the best hit so far are skipped,
// so the answer matches the serial scan.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t n, Pred&& pred) {
  std::atomic<std::size_t> best{n};
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (u >= best.load(std::memory_order_relaxed)) continue;
    if (pred(u)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (u < cur && !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == n) return std::nullopt;
  return b;
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace omp

template <class Pred>
std::optional<std::size_t> first_index(std::size_t n, Pred&& pred, Exec exec) {
  if (exec == Exec::parallel) return omp::first_index(n, pred);
  return serial::first_index(n, pred);
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn, Exec exec) {
  if (exec == Exec::parallel) return omp::map_indices<T>(n, fn);
  return serial::map_indices<T>(n, fn);
}

// Lexicographically first (a,b) in [0,n)^2 with pred(a,b).
template <class Pred>
std::optional<std::array<Index, 2>> first_pair(Index n, Pred&& pred, Exec exec) {
  std::vector<Index> inner(n, 0);
  auto hit = first_index(
      n,
      [&](std::size_t a) {
        for (Index b = 0; b < n; ++b) {
          if (pred(static_cast<Index>(a), b)) {
            inner[a] = b;
            return true;
          }
        }
        return false;
      },
      exec);
  if (!hit) return std::nullopt;
  return std::array<Index, 2>{static_cast<Index>(*hit), inner[*hit]};
}

// Lexicographically first (a,b,c) in [0,n)^3 with pred(a,b,c).
template <class Pred>
std::optional<std::array<Index, 3>> first_triple(Index n, Pred&& pred, Exec exec) {
  std::vector<std::array<Index, 2>> inner(n);
  auto hit = first_index(
      n,
      [&](std::size_t a) {
        for (Index b = 0; b < n; ++b) {
          for (Index c = 0; c < n; ++c) {
            if (pred(static_cast<Index>(a), b, c)) {
              inner[a] = {b, c};
              return true;
            }
          }
        }
        return false;
      },
      exec);
  if (!hit) return std::nullopt;
  return std::array<Index, 3>{static_cast<Index>(*hit), inner[*hit][0], inner[*hit][1]};
}

}  // namespace srcert::kernels
