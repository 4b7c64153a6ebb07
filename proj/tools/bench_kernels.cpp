/* Benchmark of the two OpenMP kernels against their serial reference
 * implementations: ordered-deformation enumeration (pruned parallel search
 * vs. the exhaustive serial odometer) and restriction summation (parallel
 * per-deformation terms vs. the serial fold).  Both variants must agree
 * exactly; the benchmark re-checks that on every repetition. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chow/deformations.hpp"
#include "chow/dual_tree.hpp"
#include "chow/polynomial.hpp"
#include "chow/strata_classes.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct Row {
    std::string name;
    double serial_ms = 0;
    double parallel_ms = 0;
    bool equal = false;
};

Row bench_enumeration(const std::string& name, const chow::DualTree& target,
                      const chow::DualTree& source, int reps) {
    Row row;
    row.name = name;
    std::vector<chow::OrderedDeformation> serial, parallel;
    row.serial_ms = time_ms([&] {
        for (int i = 0; i < reps; ++i)
            serial = chow::enumerate_ordered_deformations_serial(target, source);
    });
    row.parallel_ms = time_ms([&] {
        for (int i = 0; i < reps; ++i)
            parallel = chow::enumerate_ordered_deformations(target, source);
    });
    row.equal = serial == parallel;
    return row;
}

Row bench_restriction(const std::string& name, const chow::DualTree& from,
                      const chow::Polynomial& a, const chow::DualTree& to, int reps) {
    Row row;
    row.name = name;
    chow::Polynomial serial, parallel;
    row.serial_ms = time_ms([&] {
        for (int i = 0; i < reps; ++i)
            serial = chow::restrict_extended_class_serial(from, a, to).value;
    });
    row.parallel_ms = time_ms([&] {
        for (int i = 0; i < reps; ++i)
            parallel = chow::restrict_extended_class(from, a, to).value;
    });
    row.equal = serial == parallel;
    return row;
}

void print_row(const Row& row) {
    std::printf("%-38s %10.2f %12.2f %8.2fx  %s\n", row.name.c_str(), row.serial_ms,
                row.parallel_ms, row.serial_ms / (row.parallel_ms > 0 ? row.parallel_ms : 1),
                row.equal ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    std::printf("%-38s %10s %12s %9s\n", "kernel", "serial/ms", "parallel/ms", "speedup");

    bool all_equal = true;
    const auto run = [&all_equal](const Row& row) {
        print_row(row);
        all_equal = all_equal && row.equal;
    };

    run(bench_enumeration("enumerate edge <- chain8", chow::tree_from_name("edge"),
                          chow::tree_from_name("chain8"), 60));
    run(bench_enumeration("enumerate chain2 <- chain7", chow::tree_from_name("chain2"),
                          chow::tree_from_name("chain7"), 60));
    run(bench_enumeration("enumerate chain3 <- chain6", chow::tree_from_name("chain3"),
                          chow::tree_from_name("chain6"), 60));

    const chow::Polynomial t1 = chow::Polynomial::variable("t1");
    const chow::Polynomial t2 = chow::Polynomial::variable("t2");
    const chow::Polynomial r1 = chow::Polynomial::variable("r1");
    run(bench_restriction("restrict edge -> chain3, deg 16", chow::tree_from_name("edge"),
                          (t1 + t2).pow(16), chow::tree_from_name("chain3"), 40));
    run(bench_restriction("restrict edge -> star3, deg 16", chow::tree_from_name("edge"),
                          (t1 + t2).pow(16), chow::tree_from_name("star3"), 40));
    run(bench_restriction("restrict chain2 -> star3, deg 16", chow::tree_from_name("chain2"),
                          (t1 * t2 - r1 * r1).pow(8), chow::tree_from_name("star3"), 40));

    std::printf("%s\n", all_equal ? "all kernels agree with their serial references"
                                  : "KERNEL MISMATCH");
    return all_equal ? 0 : 1;
}
