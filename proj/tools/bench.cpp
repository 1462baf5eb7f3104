// Compares the serial reference bead evaluation against the OpenMP kernel
// and against network contraction, printing timings and checking agreement.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "evaluator.hpp"
#include "registry.hpp"

using namespace hd;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    std::string alg = argc > 1 ? argv[1] : "QS3";
    int pmax = argc > 2 ? std::atoi(argv[2]) : 6;
    HContext ctx(builtin_algebra(alg));
    std::cout << "algebra " << alg << " (d = " << ctx.d << ")\n";
    std::cout << "graph      serial-ms  parallel-ms  speedup  network-ms  Z\n";
    for (int p = 1; p <= pmax; ++p) {
        OGraph g = lens(p);
        Scalar zs, zp, zn;
        double ts = time_ms([&] { zs = evaluate_bead_serial(ctx, g, p); });
        double tp = time_ms([&] { zp = evaluate_bead(ctx, g, p); });
        double tn = time_ms([&] { zn = evaluate_network(ctx, rotate_for_width(g)); });
        if (zs != zp || zs != zn) {
            std::cerr << "DISAGREEMENT on lens(" << p << ")\n";
            return 1;
        }
        std::printf("lens(%d)  %10.1f  %11.1f  %7.2f  %10.1f  %s\n", p, ts, tp,
                    tp > 0 ? ts / tp : 0.0, tn, zs.str().c_str());
    }
    return 0;
}
