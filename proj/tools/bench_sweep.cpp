// Compares the parallel character sweep against the serial reference on the
// bundled complexes and checks that both return identical Betti tables.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

#include "jumploci/twisted.hpp"

using namespace jumploci;

namespace {

double seconds_of(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long order = argc > 1 ? std::atol(argv[1]) : 8;
    struct Case {
        const char* name;
        LaurentComplex complex;
    };
    std::vector<Case> cases;
    cases.push_back({"wedge", wedge_two_circles()});
    cases.push_back({"two-torus", two_torus_complex()});
    cases.push_back({"pencil", presentation_to_complex(pencil_presentation())});

    bool ok = true;
    for (const auto& c : cases) {
        auto chars = torsion_sweep(c.complex.n, order);
        std::vector<std::vector<int>> serial, parallel;
        double ts = seconds_of([&] { serial = sweep_betti_serial(c.complex, chars); });
        double tp = seconds_of([&] { parallel = sweep_betti(c.complex, chars); });
        bool match = serial == parallel;
        ok = ok && match;
        std::cout << c.name << ": " << chars.size() << " characters, serial " << ts
                  << "s, parallel " << tp << "s, speedup " << (tp > 0 ? ts / tp : 0.0)
                  << (match ? "" : "  MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}
