// Compares the serial reference kernels against their OpenMP forms on the
// workloads that dominate the toolkit: exhaustive pair/triple scans, bulk
// table assembly, and sparse row reduction.  Each row reports both times and
// whether the two forms produced identical results; exit is nonzero on any
// disagreement, so the benchmark doubles as a consistency check.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootleib/chevalley.hpp"
#include "rootleib/json_io.hpp"
#include "rootleib/leibniz.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/matrixleib.hpp"
#include "rootleib/scan.hpp"

using namespace rootleib;
using Clock = std::chrono::steady_clock;

namespace {

double run(void (*f)(), const char*);

template <class F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void row(const char* name, long items, double serial, double parallel, bool agree) {
  std::printf("%-42s %10ld %10.3fs %10.3fs %7.2fx   %s\n", name, items, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "agree" : "DISAGREE");
  if (!agree) ++failures;
}

// The Leibniz identity as a triple predicate over a bracket table.
auto identity_check(const LeibnizAlgebra& L) {
  return [&L](long i, long j, long k) {
    SVec inner = L.bracket_sv(SVec{{j, Q(1)}}, SVec{{k, Q(1)}});
    SVec lhs = L.bracket_sv(SVec{{i, Q(1)}}, inner);
    SVec left = L.bracket_sv(L.bb(i, j), SVec{{k, Q(1)}});
    SVec right = L.bracket_sv(L.bb(i, k), SVec{{j, Q(1)}});
    return svec_eq(lhs, svec_axpy(left, Q(-1), right));
  };
}

void bench_triple_scan(const char* name, const LeibnizAlgebra& L) {
  auto ok = identity_check(L);
  std::optional<Triple> a, b;
  double ts = timed([&] { a = scan_triples_serial(L.dim, ok); });
  double tp = timed([&] { b = scan_triples_parallel(L.dim, ok); });
  row(name, L.dim * L.dim * L.dim, ts, tp, a == b);
}

void bench_pair_scan(const char* name, const LeibnizAlgebra& L) {
  auto ok = [&L](long i, long j) {
    return svec_eq(L.bb(i, j), svec_scaled(L.bb(j, i), Q(-1)));
  };
  std::optional<Pair> a, b;
  double ts = timed([&] { a = scan_pairs_serial(L.dim, ok); });
  double tp = timed([&] { b = scan_pairs_parallel(L.dim, ok); });
  row(name, L.dim * L.dim, ts, tp, a == b);
}

// Bulk assembly of iterated-bracket columns, the shape of boundary-map and
// product-table construction.
void bench_fill_table(const char* name, const LeibnizAlgebra& L) {
  long n = L.dim * L.dim * L.dim;
  auto gen = [&L](long t) {
    long d = L.dim;
    long i = t / (d * d), j = (t / d) % d, k = t % d;
    return L.bracket_sv(SVec{{i, Q(1)}}, L.bb(j, k));
  };
  std::vector<SVec> a, b;
  double ts = timed([&] { fill_table_serial(a, n, gen); });
  double tp = timed([&] { fill_table_parallel(b, n, gen); });
  bool agree = a.size() == b.size();
  for (std::size_t i = 0; agree && i < a.size(); ++i) agree = svec_eq(a[i], b[i]);
  row(name, n, ts, tp, agree);
}

void bench_rref(const char* name, const SparseMat& m) {
  std::vector<SVec> rows_a = m.to_cols();
  std::vector<SVec> rows_b = rows_a;
  Rref a, b;
  double ts = timed([&] { a = rref_rows(std::move(rows_a), m.rows, false); });
  double tp = timed([&] { b = rref_rows(std::move(rows_b), m.rows, true); });
  row(name, static_cast<long>(m.to_cols().size()), ts, tp, a == b);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-42s %10s %11s %11s %8s   %s\n", "workload", "items", "serial",
              "parallel", "speedup", "result");

  ChevalleyAlgebra d4 =
      build_chevalley(build_root_system(SLType::D, 4), VerifyLevel::Off);
  ChevalleyAlgebra e6 =
      build_chevalley(build_root_system(SLType::E, 6), VerifyLevel::Off);
  Dialgebra k2 = dialgebra_from_json(
      load_json_file(std::string(ROOTLEIB_DATA_DIR) + "/k2.json"));
  MatrixLeibnizAlgebra sl3 = build_sl(3, k2);

  bench_triple_scan("triple scan: identity on the D4 algebra", d4.alg);
  bench_triple_scan("triple scan: identity on the E6 algebra", e6.alg);
  bench_pair_scan("pair scan: antisymmetry on E6", e6.alg);
  bench_fill_table("table assembly: iterated brackets, D4", d4.alg);
  bench_rref("row reduction: degree-3 boundary of sl(3)",
             boundary(sl3.carrier, 3));

  if (failures) std::printf("%d kernel disagreement(s)\n", failures);
  return failures ? 1 : 0;
}
