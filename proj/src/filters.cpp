#include "fhn/filters.hpp"

#include <cmath>

#include "fhn/errors.hpp"

namespace fhn {

bool FilterParams::valid(std::string* why) const {
    if (!(tau1 > 0.0) || !(tau2 > 0.0) || !std::isfinite(tau1) || !std::isfinite(tau2)) {
        if (why) *why = "tau1 > 0 and tau2 > 0";
        return false;
    }
    return true;
}

FilterState filter_rhs(const FilterState& fs, double sum_y, double sum_y3, const FilterParams& fp) {
    const double tt = fp.tau1 * fp.tau2;
    const double ts = fp.tau1 + fp.tau2;

    // Two realizations, transcribed as-is: pW(p) on sum(y) via (w1, w2) with
    // x1 as the integrated output, and pW(p) on sum(y^3) via (x2, x4).
    FilterState d;
    d.w1 = -ts / tt * fs.w1 + fs.w2 - ts / (tt * tt) * sum_y;
    d.w2 = -fs.w1 / tt - sum_y / (tt * tt);
    d.x1 = fs.w1 + sum_y / tt;
    d.x2 = -ts / tt * fs.x2 - fs.x4 / tt + sum_y3 / tt;
    d.x3 = fs.x1;
    d.x4 = fs.x2;
    return d;
}

FilterOutputs filter_outputs(const FilterState& fs, double sum_y, const FilterParams& fp) {
    FilterOutputs out;
    out.y_star = fs.w1 + sum_y / (fp.tau1 * fp.tau2);
    out.z = {fs.x1, fs.x2, fs.x3, fs.x4, 1.0};
    return out;
}

} // namespace fhn
