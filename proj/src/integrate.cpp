#include "fhn/integrate.hpp"

#include <cmath>

#include "fhn/errors.hpp"

namespace fhn {

bool IntegratorConfig::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(dt > 0.0) || !std::isfinite(dt)) return fail("dt > 0");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) return fail("t_end >= 0");
    if (record_stride < 1) return fail("record_stride >= 1");
    return true;
}

Rk4Stepper::Rk4Stepper(std::size_t dim) : k1_(dim), k2_(dim), k3_(dim), k4_(dim), tmp_(dim) {}

void Rk4Stepper::step(const OdeRhs& rhs, std::span<double> x, double t, double dt) {
    const std::size_t n = x.size();
    const double h2 = dt / 2.0;

    rhs(t, x, k1_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + h2 * k1_[i];
    rhs(t + h2, tmp_, k2_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + h2 * k2_[i];
    rhs(t + h2, tmp_, k3_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = x[i] + dt * k3_[i];
    rhs(t + dt, tmp_, k4_);

    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
        finite = finite && std::isfinite(x[i]);
    }
    if (!finite) throw NonFiniteState(t + dt);
}

std::vector<double> rk4_step(const OdeRhs& rhs, std::span<const double> state, double t, double dt) {
    std::vector<double> x(state.begin(), state.end());
    Rk4Stepper stepper(x.size());
    stepper.step(rhs, x, t, dt);
    return x;
}

void integrate(const OdeRhs& rhs, std::span<const double> x0, const IntegratorConfig& cfg,
               const std::vector<Observer>& observers) {
    std::string why;
    if (!cfg.valid(&why)) throw ValidationError("integrate: " + why);

    std::vector<double> x(x0.begin(), x0.end());
    Rk4Stepper stepper(x.size());

    const auto n_full = static_cast<std::size_t>(std::floor(cfg.t_end / cfg.dt + 1e-9));
    const double remainder = cfg.t_end - static_cast<double>(n_full) * cfg.dt;
    const bool tail = remainder > 1e-12 * std::max(1.0, cfg.t_end);

    auto emit = [&](double t) {
        for (const auto& obs : observers) obs(t, x);
    };

    emit(0.0);
    std::size_t last_emitted_step = 0;
    for (std::size_t i = 0; i < n_full; ++i) {
        const double t = static_cast<double>(i) * cfg.dt;
        stepper.step(rhs, x, t, cfg.dt);
        if ((i + 1) % cfg.record_stride == 0) {
            emit(static_cast<double>(i + 1) * cfg.dt);
            last_emitted_step = i + 1;
        }
    }
    if (tail) {
        stepper.step(rhs, x, static_cast<double>(n_full) * cfg.dt, remainder);
        emit(cfg.t_end);
    } else if (n_full > 0 && last_emitted_step != n_full) {
        emit(cfg.t_end);
    }
}

} // namespace fhn
