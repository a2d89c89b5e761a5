#pragma once

#include <array>
#include <string>

namespace fhn {

// Second-order filter-differentiator W(p) = 1/((tau1*p + 1)(tau2*p + 1)).
struct FilterParams {
    double tau1 = 0.01;
    double tau2 = 0.01;

    bool valid(std::string* why = nullptr) const;
};

// State-space realization producing the regressors:
//   x1 = pW(p) sum(y),   x2 = pW(p) sum(y^3),
//   x3 =  W(p) sum(y),   x4 =  W(p) sum(y^3),
// with (w1, w2) the internal states of the pW(p) branch for sum(y).
// x3 and x4 are running integrals of x1 and x2 (dx3 = x1, dx4 = x2).
struct FilterState {
    double w1 = 0.0, w2 = 0.0;
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;
};

// The six filter rows of the coupled system, driven by sum(y) and sum(y^3).
FilterState filter_rhs(const FilterState& fs, double sum_y, double sum_y3, const FilterParams& fp);

struct FilterOutputs {
    double y_star = 0.0;          // p^2 W(p) sum(y), read off as w1 + sum(y)/(tau1*tau2)
    std::array<double, 5> z{};    // regressor (x1, x2, x3, x4, 1)
};

// y_star is computed algebraically from (w1, sum_y); the whole point of the
// filter is that no signal derivative is ever formed numerically.
FilterOutputs filter_outputs(const FilterState& fs, double sum_y, const FilterParams& fp);

} // namespace fhn
