#pragma once

#include <stdexcept>
#include <string>

namespace fhn {

// Parse failures carry file/line context in the message.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant was violated; the message names it.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// theta cannot be mapped back to (a, b, c, eps): theta2 >= 0 or
// 1 - theta1 - theta3 == 0.
struct NonRecoverable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integration produced NaN/Inf; `time` is where it happened.
struct NonFiniteState : std::runtime_error {
    explicit NonFiniteState(double t)
        : std::runtime_error("non-finite state at t = " + std::to_string(t)), time(t) {}
    double time;
};

struct WindowOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUniformSampling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChannelCountMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fhn
