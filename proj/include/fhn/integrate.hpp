#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fhn {

struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 0.0;
    std::size_t record_stride = 1; // steps between recorded samples

    bool valid(std::string* why = nullptr) const;
};

// rhs(t, x, dxdt): write the derivative of x at time t into dxdt.
using OdeRhs = std::function<void(double, std::span<const double>, std::span<double>)>;

// observer(t, x): called on recorded samples.
using Observer = std::function<void(double, std::span<const double>)>;

// Classical 4-stage Runge-Kutta, one step, no adaptivity. Reusable stage
// buffers live in the stepper so the hot loop does not allocate.
class Rk4Stepper {
  public:
    explicit Rk4Stepper(std::size_t dim);

    // Advances x in place from t to t + dt. Throws NonFiniteState if any
    // produced component is NaN/Inf. Stability is the caller's concern.
    void step(const OdeRhs& rhs, std::span<double> x, double t, double dt);

  private:
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

// Single-step convenience wrapper.
std::vector<double> rk4_step(const OdeRhs& rhs, std::span<const double> state, double t, double dt);

// Fixed-step integration from t = 0 to cfg.t_end. Observers fire at t = 0,
// every record_stride steps, and at the final state. A truncated last step
// lands exactly on t_end when t_end is not a multiple of dt.
void integrate(const OdeRhs& rhs, std::span<const double> x0, const IntegratorConfig& cfg,
               const std::vector<Observer>& observers);

} // namespace fhn
