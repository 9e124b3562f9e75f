#pragma once

// Exhaustive scan kernels over basis pairs/triples.  Each kernel exists in a
// serial reference form and an OpenMP form; both return the
// lexicographically-first violating index, so results are identical
// regardless of thread count.  The un-suffixed entry points dispatch by
// problem size.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rootleib {

using Triple = std::array<long, 3>;
using Pair = std::array<long, 2>;

// `ok(i,j,k)` must be pure and thread-safe.
template <class F>
std::optional<Triple> scan_triples_serial(long n, F&& ok) {
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        if (!ok(i, j, k)) return Triple{i, j, k};
  return std::nullopt;
}

template <class F>
std::optional<Triple> scan_triples_parallel(long n, F&& ok) {
  const long total = n * n * n;
  long best = total;
#ifdef _OPENMP
#pragma omp parallel
  {
    long local = total;
#pragma omp for schedule(static) nowait
    for (long t = 0; t < total; ++t) {
      if (t >= local) continue;  // already found an earlier violation
      long i = t / (n * n), j = (t / n) % n, k = t % n;
      if (!ok(i, j, k)) local = t;
    }
#pragma omp critical
    if (local < best) best = local;
  }
#else
  for (long t = 0; t < total; ++t) {
    long i = t / (n * n), j = (t / n) % n, k = t % n;
    if (!ok(i, j, k)) {
      best = t;
      break;
    }
  }
#endif
  if (best == total) return std::nullopt;
  return Triple{best / (n * n), (best / n) % n, best % n};
}

template <class F>
std::optional<Triple> scan_triples(long n, F&& ok) {
  if (n * n * n >= 4096) return scan_triples_parallel(n, ok);
  return scan_triples_serial(n, ok);
}

template <class F>
std::optional<Pair> scan_pairs_serial(long n, F&& ok) {
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (!ok(i, j)) return Pair{i, j};
  return std::nullopt;
}

template <class F>
std::optional<Pair> scan_pairs_parallel(long n, F&& ok) {
  const long total = n * n;
  long best = total;
#ifdef _OPENMP
#pragma omp parallel
  {
    long local = total;
#pragma omp for schedule(static) nowait
    for (long t = 0; t < total; ++t) {
      if (t >= local) continue;
      if (!ok(t / n, t % n)) local = t;
    }
#pragma omp critical
    if (local < best) best = local;
  }
#else
  for (long t = 0; t < total; ++t)
    if (!ok(t / n, t % n)) {
      best = t;
      break;
    }
#endif
  if (best == total) return std::nullopt;
  return Pair{best / n, best % n};
}

template <class F>
std::optional<Pair> scan_pairs(long n, F&& ok) {
  if (n * n >= 4096) return scan_pairs_parallel(n, ok);
  return scan_pairs_serial(n, ok);
}

// Fill `out[i]` for i in [0, n) from a pure generator; parallel form for
// bulk assembly (boundary-operator columns and similar).
template <class T, class F>
void fill_table_serial(std::vector<T>& out, long n, F&& gen) {
  out.resize(n);
  for (long i = 0; i < n; ++i) out[i] = gen(i);
}

template <class T, class F>
void fill_table_parallel(std::vector<T>& out, long n, F&& gen) {
  out.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long i = 0; i < n; ++i) out[i] = gen(i);
}

template <class T, class F>
void fill_table(std::vector<T>& out, long n, F&& gen) {
  if (n >= 1024)
    fill_table_parallel(out, n, gen);
  else
    fill_table_serial(out, n, gen);
}

}  // namespace rootleib
