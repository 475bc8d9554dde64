// Runs every acceptance suite over its shape set and prints one PASS/FAIL line per criterion.

#include "gcrystal/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace gcrystal;

namespace {

constexpr std::uint64_t base_seed = 20240601;

std::vector<Shape> standard_shapes() { return {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}}; }

std::vector<Shape> module_shapes()
{
    std::vector<Shape> out;
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            if (binomial(n + 1, k) <= 252) {
                out.emplace_back(n, k);
            }
        }
    }
    return out;
}

std::uint64_t shape_seed(const SuiteInfo& info, const Shape& s)
{
    return base_seed + static_cast<std::uint64_t>(info.criterion) * 10000 + static_cast<std::uint64_t>(s.n() * 100 + s.k());
}

} // namespace

int main()
{
    bool all_ok = true;
    for (const auto& info : suite_registry()) {
        const auto shapes = info.name == "fundrep" ? module_shapes() : standard_shapes();
        std::uint64_t passed = 0;
        std::uint64_t failed = 0;
        std::uint64_t observed = 0;
        std::uint64_t proportional = 0;
        std::uint64_t inverse_corner = 0;
        std::string first_failure;
        const auto start = std::chrono::steady_clock::now();
        for (const auto& s : shapes) {
            const RunReport rep = run_suite(info.name, s, info.default_trials, shape_seed(info, s));
            passed += rep.total_passed();
            failed += rep.total_failed();
            for (const auto& o : rep.observations()) {
                if (o.contains("proportional_count")) {
                    proportional += o["proportional_count"].get<std::uint64_t>();
                    inverse_corner += o["ratio_inverse_corner_count"].get<std::uint64_t>();
                    observed += static_cast<std::uint64_t>(o["trials"].get<int>());
                }
            }
            if (!rep.passed() && first_failure.empty()) {
                first_failure = rep.summary();
            }
        }
        const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
        const bool ok = failed == 0;
        all_ok = all_ok && ok;
        std::printf("%s criterion %d (%s): %llu checks passed, %llu failed, %zu shapes, %.1f s", ok ? "PASS" : "FAIL",
                    info.criterion, info.name.c_str(), static_cast<unsigned long long>(passed),
                    static_cast<unsigned long long>(failed), shapes.size(), secs.count());
        if (observed > 0) {
            std::printf("; proportional on %llu of %llu points, ratio 1/x_1^(n) on %llu (report-only)",
                        static_cast<unsigned long long>(proportional), static_cast<unsigned long long>(observed),
                        static_cast<unsigned long long>(inverse_corner));
        }
        std::printf("\n");
        if (!first_failure.empty()) {
            std::cout << first_failure;
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
