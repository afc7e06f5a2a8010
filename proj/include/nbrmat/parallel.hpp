// Copyright 2026 The nbrmat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NBRMAT_PARALLEL_HPP
#define NBRMAT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace nbrmat {

/// Worker cap: NBRMAT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for every i in [0, count). Iterations must write disjoint
/// outputs; results never depend on the schedule. The first exception thrown
/// by any iteration is rethrown on the caller's thread.
/// Calls made from inside a body run serially.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)> &body);

} // namespace nbrmat

#endif // NBRMAT_PARALLEL_HPP
