// Wall-clock comparison of the OpenMP kernels against their serial references.
#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "qbg/diamond.hpp"
#include "qbg/level_zero.hpp"
#include "qbg/tilted.hpp"
#include "qbg/verify.hpp"

using namespace qbg;

namespace {

double best_ms(int reps, const std::function<std::size_t()>& f, std::size_t& sink) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        sink += f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& kernel, const std::string& input, int reps, const std::function<std::size_t()>& par,
         const std::function<std::size_t()>& ser) {
    std::size_t sink = 0;
    double p = best_ms(reps, par, sink);
    double s = best_ms(reps, ser, sink);
    std::printf("%-20s %-16s %10.2f %10.2f %7.2fx\n", kernel.c_str(), input.c_str(), s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OpenMP kernels against serial references"};
    int reps = 3;
    std::string types = "A4,B4,D4,F4";
    app.add_option("--reps", reps, "repetitions, best time kept");
    app.add_option("--types", types, "root systems for the graph kernels");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-20s %-16s %10s %10s %8s\n", "kernel", "input", "serial ms", "omp ms", "speedup");
    for (const TypeSpec& t : parse_types(types)) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        Parabolic none = make_parabolic(W.roots(), 0);
        const std::string name = W.roots().name();
        row("build_qbg", name, reps, [&] { return build_qbg(W, none).num_edges(); },
            [&] { return build_qbg_serial(W, none).num_edges(); });
        QbgGraph g = build_qbg(W, none);
        row("all_pairs_distances", name, reps, [&] { return std::size_t(all_pairs_distances(g).diameter()); },
            [&] { return std::size_t(all_pairs_distances_serial(g).diameter()); });
        row("all_diamonds", name, reps, [&] { return all_diamonds(g, DiamondSide::Left).size(); },
            [&] { return all_diamonds_serial(g, DiamondSide::Left).size(); });
    }
    for (const TypeSpec& t : parse_types("A3,B3")) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        const std::string name = W.roots().name();
        row("tilted_sweep", name, reps, [&] { return tilted_sweep(W).checked; },
            [&] { return tilted_sweep_serial(W).checked; });
        QbgGraph g = build_qbg(W, make_parabolic(W.roots(), 0));
        row("postnikov_sweep", name, reps, [&] { return postnikov_sweep(g).checked; },
            [&] { return postnikov_sweep_serial(g).checked; });
    }
    for (auto [type, lam] : {std::pair{'A', Vec{2, 1}}, std::pair{'G', Vec{1, 1}}}) {
        WeylGroup W(RootSystem::build(type, 2));
        LevelZeroContext ctx(W, lam);
        const std::string name = W.roots().name() + " " + format_vec(lam);
        row("level_zero_slice", name, reps, [&] { return LevelZeroSlice::build(ctx, 3).elements().size(); },
            [&] { return LevelZeroSlice::build_serial(ctx, 3).elements().size(); });
    }
    return 0;
}
