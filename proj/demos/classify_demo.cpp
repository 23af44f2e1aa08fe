// Walks one shape end to end: enumerates its standard tableaux, classifies
// each component, and prints the membership chain certifying the first
// singular verdict's probe count.

#include <iostream>

#include "springer/certificates.hpp"
#include "springer/criterion.hpp"
#include "springer/tableau.hpp"

int main() {
    using namespace springer;
    const TwoColumnShape shape = make_shape(4, 2);
    std::cout << "shape " << to_string(shape) << ", component dimension "
              << component_dimension(shape) << "\n\n";

    for (const auto& t : enumerate_standard(shape)) {
        ComponentReport report = classify(t);
        std::cout << t.to_literal() << "  probes " << report.fixed_point_count << "/"
                  << report.threshold << "  " << (report.singular ? "singular" : "nonsingular")
                  << "\n";
    }

    const StandardTableau t = parse_standard(shape, "1,3;2,5;4;6");
    const StandardTableau bar = t_bar(shape);
    Certificate cert = membership_chain(t, bar);
    std::cout << "\nchain moving " << bar.to_literal() << " into the column content of "
              << t.to_literal() << ":\n";
    for (const auto& step : cert.steps)
        std::cout << "  [" << to_string(step.kind) << "] (" << step.switched.first << ","
                  << step.switched.second << ") -> " << step.to.to_literal() << "\n";
    return 0;
}
