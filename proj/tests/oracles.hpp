#pragma once

// Independent cross-checks used by the unit tests.  Everything here is
// deliberately naive — double-precision quadrature, finite differences, a
// textbook 2x2 eigensolver — so that agreement with the exact library code is
// evidence rather than tautology.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

// Composite Simpson quadrature on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels = 4096) {
    double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Average of f over one period [0, 2 pi].
inline double circle_average(const std::function<double(double)>& f,
                             int panels = 8192) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return simpson(f, 0.0, kTwoPi, panels) / kTwoPi;
}

// Angular moment of order m as an integral: the average of
// cos(t)^m * (1 - cos(t)) / 2 over the circle.
inline double moment_quadrature(int m) {
    return circle_average([m](double t) {
        return std::pow(std::cos(t), m) * (1.0 - std::cos(t)) / 2.0;
    });
}

// Eigenvalues of [[a, b], [c, d]] with real spectrum, |lambda1| >= |lambda2|.
inline std::array<double, 2> eig2(double a, double b, double c, double d) {
    double tr = a + d, det = a * d - b * c;
    double disc = tr * tr - 4 * det;
    double s = std::sqrt(disc);
    double l1 = (tr + s) / 2, l2 = (tr - s) / 2;
    if (std::fabs(l1) < std::fabs(l2)) std::swap(l1, l2);
    return {l1, l2};
}

// Central finite difference of f at x.
inline double fdiff(const std::function<double(double)>& f, double x,
                    double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

// Deterministic RNG for sampled-property tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline std::string random_word(int max_len) {
    static const char letters[] = {'a', 'b', 'c'};
    std::uniform_int_distribution<int> len_d(1, max_len), let_d(0, 2);
    int len = len_d(rng());
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back(letters[let_d(rng())]);
    return w;
}

} // namespace oracles
