#pragma once

#include <random>
#include <string>
#include <vector>

#include "knc/curve.hpp"

namespace knc::testing {

CycloElem frac(long num, long den = 1);
CycloElem unity(unsigned order, long j = 1);

struct NamedCurve {
    std::string name;
    HyperellipticCurve curve;
    std::string group;  // expected automorphism group name
};

HyperellipticCurve cubic_t3_minus_t();
// k = 3, params (1, 4): n = 3, flip parameter c = 2.
HyperellipticCurve golden_n3k3();
// k = 3, params (2, 1/2): n = 3, flip parameter c = 1.
HyperellipticCurve golden_n3k3_unit();
// k = 3, params (1, 36, 2, 18, 3, 12): n = 9, c = 6.
HyperellipticCurve golden_n9k3();
// k = 2, params (1, 16, 2, 8): n = 4, c = 4.
HyperellipticCurve golden_n4k2();

// Curves covering every group family that occurs; genus <= 6 except dic4_n8.
std::vector<NamedCurve> catalog();

// Random nonsingular curve with n <= max_n over Q(zeta_M), M drawn from {1, 3, 4}.
HyperellipticCurve random_curve(std::mt19937& rng, long max_n = 4);
CycloElem random_elem(std::mt19937& rng, unsigned order, long bound = 5);

}  // namespace knc::testing
