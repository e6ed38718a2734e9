// Compares the serial and OpenMP paths of the heavy kernels and checks that
// both produce identical results. Timings go to stdout; nothing here is part
// of the verification reports.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "gspin/field.hpp"
#include "gspin/linalg.hpp"
#include "gspin/observable.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/suites.hpp"

using namespace gspin;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const char* kernel, double serial_s, double parallel_s) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", kernel, serial_s,
                parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

int fail(const char* what) {
    std::fprintf(stderr, "MISMATCH: %s differs between serial and parallel runs\n", what);
    return 1;
}

} // namespace

int main() {
    auto g = symmetric_group(3);
    auto whole = Subgroup::whole(g);

    // law checking on the double of the full symmetric pair
    auto D = build_double(g, whole);
    VerifyOptions serial_opts;
    serial_opts.parallel = false;
    VerifyOptions parallel_opts;
    parallel_opts.parallel = true;

    auto t0 = clock_type::now();
    auto rep_serial = verify_star_algebra(D.hopf.base(), serial_opts);
    double law_serial = seconds_since(t0);
    t0 = clock_type::now();
    auto rep_parallel = verify_star_algebra(D.hopf.base(), parallel_opts);
    double law_parallel = seconds_since(t0);
    report("star-algebra laws (dim 36)", law_serial, law_parallel);
    for (std::size_t i = 0; i < rep_serial.laws.size(); ++i) {
        const auto& a = rep_serial.laws[i];
        const auto& b = rep_parallel.laws[i];
        if (a.checked != b.checked || a.failed != b.failed) return fail("law results");
    }

    // exact rank of a batch of pseudo-random sparse vectors
    auto space = make_space("bench", 4096);
    std::mt19937_64 rng(7);
    std::vector<AlgebraElement> batch;
    for (int i = 0; i < 300; ++i) {
        AlgebraElement v(space);
        for (int k = 0; k < 40; ++k) {
            v.add_term(rng() % 4096, Scalar::rational(static_cast<long>(rng() % 19) - 9,
                                                      1 + static_cast<long>(rng() % 7)));
        }
        batch.push_back(std::move(v));
    }
    t0 = clock_type::now();
    auto rank_serial = span_rank(batch, {.parallel = false});
    double rank_s = seconds_since(t0);
    t0 = clock_type::now();
    auto rank_parallel = span_rank(batch, {.parallel = true});
    double rank_p = seconds_since(t0);
    report("span rank (300 x 4096)", rank_s, rank_p);
    if (rank_serial != rank_parallel) return fail("span rank");

    // field products: closed form against word rewriting
    FieldAlgebra F(g, whole, {1, 2});
    std::mt19937_64 frng(11);
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < 20000; ++i) pairs.emplace_back(frng() % F.dim(), frng() % F.dim());
    t0 = clock_type::now();
    std::uint64_t hits_rewrite = 0;
    for (auto [a, b] : pairs) hits_rewrite += F.mul_basis_rewrite(a, b).term_count();
    double mul_rewrite = seconds_since(t0);
    t0 = clock_type::now();
    std::uint64_t hits_closed = 0;
    for (auto [a, b] : pairs) hits_closed += F.algebra().mul_basis(a, b).term_count();
    double mul_closed = seconds_since(t0);
    report("field products (20k pairs)", mul_rewrite, mul_closed);
    if (hits_rewrite != hits_closed) return fail("field products");

    // generated span of the invariant subalgebra
    t0 = clock_type::now();
    auto span_serial = generated_span(F, {.parallel = false});
    double span_s = seconds_since(t0);
    t0 = clock_type::now();
    auto span_parallel = generated_span(F, {.parallel = true});
    double span_p = seconds_since(t0);
    report("generated span (dim 7776)", span_s, span_p);
    if (span_serial.rank() != span_parallel.rank()) return fail("generated span rank");
    for (std::uint64_t i = 0; i < span_serial.rank(); ++i) {
        if (!(span_serial.rows()[i] == span_parallel.rows()[i])) return fail("generated span rows");
    }

    std::puts("all kernels agree");
    return 0;
}
