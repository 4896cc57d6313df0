// Push the degree-57 plane curve through the quadric into X^3_9, pair it with
// the quadric through the nine points, and test linear generation.

#include "blowup/blowup.hpp"

#include <iostream>

int main() {
    using namespace blowup;
    const auto cm = parse_quadric("57h - 18e0 - ... - 18e9");
    std::cout << "ruling basis: " << format_quadric(quadric_basis_change(cm, QuadricBasis::Ruling)) << '\n';

    const auto image = pushforward_to_X39(cm);
    std::cout << "pushforward:  " << format_class(image) << '\n';

    const auto quadric = CycleClass::from_form(Ambient(3, 9), 2, uniform_form(2, 1, 9));
    std::cout << "Q . image:    " << to_string(degree_pairing(quadric, image)) << '\n';

    const auto verdict = is_linearly_generated_class(image);
    if (verdict.violated)
        std::cout << "not in the span of lines: " << to_string(verdict.violated->kind) << " fails, "
                  << to_string(verdict.violated->lhs) << " < " << to_string(verdict.violated->rhs) << '\n';

    const auto report = certify_ddelta({Rational(226, 692), Rational(217, 692)});
    std::cout << "D_delta certificate at delta = 226/692: " << (report.passed() ? "pass" : "fail") << '\n';
}
