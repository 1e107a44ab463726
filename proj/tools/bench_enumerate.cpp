// Times the parallel morphism enumeration against the serial reference on
// assignment containers of growing class count and checks they agree.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <ngc/cra.hpp>
#include <ngc/enumerate.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace ngc;

// A method shared by two classes: quadratic in the class count, so the
// candidate fan-out at the split node grows with the container.
GraphPtr shared_method_pattern() {
    TypedGraph p;
    p.type_graph = cra_type_graph();
    p.name = "shared-method";
    p.nodes = {{"m", "Method"}, {"c1", "Class"}, {"c2", "Class"}};
    p.edges = {{"e1", {"encapsulatesMethod", "c1", "m"}},
               {"e2", {"encapsulatesMethod", "c2", "m"}}};
    return std::make_shared<const TypedGraph>(std::move(p));
}

GraphPtr container_with(std::size_t classes) {
    CraInstance instance;
    for (int i = 1; i <= 6; ++i)
        instance.methods.push_back("M" + std::to_string(i));
    for (int i = 1; i <= 3; ++i)
        instance.attributes.push_back("A" + std::to_string(i));
    instance.functional_deps = {{"M1", "M2"}, {"M2", "M3"}};
    instance.data_deps = {{"M1", "A1"}, {"M4", "A2"}};
    instance.class_count = classes;
    return build_cra_container(instance).container;
}

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled, parallel path falls back to serial\n");
#endif
    std::printf("%8s %10s %10s %12s %12s %8s\n", "classes", "elements", "matches", "serial ms",
                "parallel ms", "speedup");

    GraphPtr pattern = shared_method_pattern();
    bool all_equal = true;
    for (std::size_t classes : {8, 16, 24, 32, 48}) {
        GraphPtr host = container_with(classes);

        std::vector<GraphMorphism> serial, parallel;
        // Warm one serial pass so allocator effects do not skew the first row.
        enumerate_injective_morphisms_serial(pattern, host);
        double serial_ms = time_ms([&] { serial = enumerate_injective_morphisms_serial(pattern, host); });
        double parallel_ms = time_ms([&] { parallel = enumerate_injective_morphisms(pattern, host); });

        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = morphism_equal(serial[i], parallel[i]);
        all_equal = all_equal && equal;

        std::printf("%8zu %10zu %10zu %12.2f %12.2f %7.2fx%s\n", classes, graph_size(*host),
                    serial.size(), serial_ms, parallel_ms,
                    parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "" : "  MISMATCH");
    }
    if (!all_equal) {
        std::printf("serial and parallel enumeration disagree\n");
        return 1;
    }
    return 0;
}
