#pragma once

#include <random>

#include "zdb/interval.hpp"
#include "zdb/oracle.hpp"

namespace zdb::testing {

// One random containment trial: a point x (and y) is drawn, the interval
// operation runs on a small interval around it, and the 300-bit oracle value
// at the point must land inside the result.
inline bool containment_trial(std::mt19937_64& rng, unsigned bits = 128) {
    using oracle::Real;
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> ex(-20, 20);
    auto draw = [&](bool positive) {
        double v = std::ldexp(mant(rng), ex(rng));
        if (positive) v = std::fabs(v) + 1e-300;
        return v;
    };
    auto around = [&](double v) {
        const double w = std::ldexp(std::fabs(v), -30);
        return Interval::hull_of(Interval::exact(v - w, bits), Interval::exact(v + w, bits));
    };
    const int op = pick(rng);
    const bool pos = op >= 4;
    double x = draw(pos), y = draw(false);
    if (op == 4) x = std::ldexp(mant(rng), 5);  // exp stays in range
    if (op == 7) {
        x = std::fabs(x);
        y = std::ldexp(mant(rng), 3);
    }
    const Interval X = around(x), Y = around(y);
    const Real rx(x), ry(y);
    switch (op) {
        case 0: return oracle::encloses(X + Y, rx + ry);
        case 1: return oracle::encloses(X - Y, rx - ry);
        case 2: return oracle::encloses(X * Y, rx * ry);
        case 3:
            if (Y.contains_zero()) return true;
            return oracle::encloses(X / Y, rx / ry);
        case 4: return oracle::encloses(exp(X), exp(rx));
        case 5: return oracle::encloses(ln(X), log(rx));
        case 6: return oracle::encloses(sqrt(X), sqrt(rx));
        case 7: return oracle::encloses(pow(X, Y), pow(rx, ry));
        case 8: return oracle::encloses(sqr(X), rx * rx);
        default: return oracle::encloses(asinh(X), asinh(rx));
    }
}

}  // namespace zdb::testing
