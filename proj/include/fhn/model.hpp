#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fhn {

// Original FitzHugh-Nagumo parameters of one node, plus the measurement
// scaling y = c*u and the known external current.
struct FhnParams {
    double a = 0.0;
    double b = 0.0;   // > 0
    double eps = 0.0; // > 0 (relative velocity of the slow currents)
    double c = 1.0;   // > 0 (sensor scaling, unknown in identification)
    double i_ext = 0.0;

    bool valid(std::string* why = nullptr) const;
};

// The 5 regression parameters. theta is recoverable back to (a, b, c, eps)
// iff theta2 < 0 and 1 - theta1 - theta3 > 0.
struct Theta {
    std::array<double, 5> v{};

    double operator[](std::size_t i) const { return v[i]; }
    double& operator[](std::size_t i) { return v[i]; }

    bool recoverable() const { return v[1] < 0.0 && 1.0 - v[0] - v[2] > 0.0; }
};

// Simple undirected graph as a 0/1 matrix (zero diagonal).
struct Adjacency {
    std::size_t n = 0;
    std::vector<std::uint8_t> a; // n*n row-major

    std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    void set_edge(std::size_t i, std::size_t j);
    std::size_t edge_count() const;
    bool connected() const;
    bool valid(std::string* why = nullptr) const; // symmetric, zero diagonal

    static Adjacency empty(std::size_t n);
    static Adjacency ring(std::size_t n);
    static Adjacency path(std::size_t n);
    static Adjacency star(std::size_t n); // node 0 is the hub
    static Adjacency complete(std::size_t n);
    static Adjacency from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

struct CouplingConfig {
    Adjacency adjacency;
    double sigma = 0.0; // >= 0, overall strength
    double b_uu = 0.0, b_uv = 0.0, b_vu = 0.0, b_vv = 0.0;

    bool valid(std::string* why = nullptr) const;
};

// Scaled membrane potentials y_k = c*u_k and recovery variables v_k.
struct NetworkState {
    std::vector<double> y;
    std::vector<double> v;
};

// theta as a function of the original parameters:
// (1 - eps*b, -c^-2/3, eps*(b-1), -eps*b*c^-2/3, N*c*eps*(a + b*i_ext)).
// eps = 0 is tolerated as the degenerate frozen-slow-current limit.
Theta theta_from_original(const FhnParams& p, std::size_t n);

struct RecoveredParams {
    FhnParams params;
    bool physical = true; // false if recovered eps <= 0 or b <= 0
};

// Inverse map. Throws NonRecoverable if theta2 >= 0 or 1 - theta1 - theta3 == 0.
RecoveredParams original_from_theta(const Theta& t, double i_ext, std::size_t n);

struct CouplingTerms {
    double y = 0.0; // Y'_k, enters dy_k/dt
    double v = 0.0; // V'_k, enters dv_k/dt
};

// Diffusive coupling sums for node k in scaled coordinates. Requires theta2 < 0.
CouplingTerms coupling_terms(std::size_t k, const NetworkState& st, const CouplingConfig& cfg, double theta2);

// Time derivative of the whole network in scaled coordinates (the plant rows
// of the coupled system). Equivalent to the (u, v) dynamics under u = y/c;
// see the consistency tests for the coordinate-change oracle.
void network_rhs(std::span<const double> y, std::span<const double> v, const Theta& theta,
                 const CouplingConfig& cfg, double i_ext, std::span<double> dy, std::span<double> dv);

NetworkState network_rhs(const NetworkState& st, const Theta& theta, const CouplingConfig& cfg, double i_ext);

} // namespace fhn
