// Builds the disjoint cover of a triangle's complement, verifies it and
// prints the regions as JSON.

#include <iostream>

#include "cofinite/cofinite.hpp"

int main()
{
    using namespace cofinite;
    Instance triangle({{0, 0}, {4, 0}, {0, 4}}, "triangle");
    Cover cover = build_disjoint_cover(triangle);
    CoverReport report = verify(cover);

    std::cout << json::dump(json::emit(cover));
    std::cout << cover.regions.size() << " regions, " << (report.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& [mult, faces] : report.multiplicity) {
        std::cout << "  multiplicity " << mult << ": " << faces << " faces\n";
    }
    return report.passed() ? 0 : 1;
}
