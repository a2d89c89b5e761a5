#include "fhn/model.hpp"

#include <cmath>
#include <queue>

#include "fhn/errors.hpp"

namespace fhn {

bool FhnParams::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(eps) && std::isfinite(c) && std::isfinite(i_ext)))
        return fail("FhnParams: all fields must be finite");
    if (!(b > 0.0)) return fail("b > 0");
    if (!(eps > 0.0)) return fail("eps > 0");
    if (!(c > 0.0)) return fail("c > 0");
    return true;
}

void Adjacency::set_edge(std::size_t i, std::size_t j) {
    a[i * n + j] = 1;
    a[j * n + i] = 1;
}

std::size_t Adjacency::edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m += at(i, j);
    return m;
}

bool Adjacency::connected() const {
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j) && !seen[j]) {
                seen[j] = true;
                ++reached;
                q.push(j);
            }
    }
    return reached == n;
}

bool Adjacency::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (n == 0 || a.size() != n * n) return fail("adjacency: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, i) != 0) return fail("adjacency: zero diagonal required");
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) > 1) return fail("adjacency: entries must be 0/1");
            if (at(i, j) != at(j, i)) return fail("adjacency: symmetric matrix required");
        }
    }
    return true;
}

Adjacency Adjacency::empty(std::size_t n) {
    Adjacency g;
    g.n = n;
    g.a.assign(n * n, 0);
    return g;
}

Adjacency Adjacency::ring(std::size_t n) {
    Adjacency g = empty(n);
    if (n == 2) {
        g.set_edge(0, 1);
        return g;
    }
    for (std::size_t i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
    return g;
}

Adjacency Adjacency::path(std::size_t n) {
    Adjacency g = empty(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

Adjacency Adjacency::star(std::size_t n) {
    Adjacency g = empty(n);
    for (std::size_t i = 1; i < n; ++i) g.set_edge(0, i);
    return g;
}

Adjacency Adjacency::complete(std::size_t n) {
    Adjacency g = empty(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

Adjacency Adjacency::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Adjacency g = empty(n);
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) throw ValidationError("adjacency: edge endpoint out of range");
        if (i == j) throw ValidationError("adjacency: zero diagonal required (self-loop)");
        g.set_edge(i, j);
    }
    return g;
}

bool CouplingConfig::valid(std::string* why) const {
    if (!adjacency.valid(why)) return false;
    if (!(sigma >= 0.0)) {
        if (why) *why = "sigma >= 0";
        return false;
    }
    if (!(std::isfinite(b_uu) && std::isfinite(b_uv) && std::isfinite(b_vu) && std::isfinite(b_vv))) {
        if (why) *why = "coupling scheme coefficients must be finite";
        return false;
    }
    return true;
}

Theta theta_from_original(const FhnParams& p, std::size_t n) {
    std::string why;
    if (n < 1) throw ValidationError("theta_from_original: n >= 1 required");
    if (!(p.b > 0.0) || !(p.c > 0.0) || !(p.eps >= 0.0))
        throw ValidationError("theta_from_original: invalid FhnParams (b > 0, c > 0, eps >= 0)");
    const double c2inv = 1.0 / (p.c * p.c);
    Theta t;
    t[0] = 1.0 - p.eps * p.b;
    t[1] = -c2inv / 3.0;
    t[2] = p.eps * (p.b - 1.0);
    t[3] = -p.eps * p.b * c2inv / 3.0;
    t[4] = static_cast<double>(n) * p.c * p.eps * (p.a + p.b * p.i_ext);
    return t;
}

RecoveredParams original_from_theta(const Theta& t, double i_ext, std::size_t n) {
    if (!(t[1] < 0.0)) throw NonRecoverable("theta2 >= 0: scaling c = 1/sqrt(-3*theta2) undefined");
    const double eps = 1.0 - t[0] - t[2];
    if (eps == 0.0) throw NonRecoverable("1 - theta1 - theta3 = 0: eps = 0, division by zero");
    const double s = std::sqrt(-3.0 * t[1]);
    RecoveredParams r;
    r.params.eps = eps;
    r.params.b = (1.0 - t[0]) / eps;
    r.params.c = 1.0 / s;
    r.params.a = (t[4] * s - static_cast<double>(n) * i_ext * (1.0 - t[0])) / (static_cast<double>(n) * eps);
    r.params.i_ext = i_ext;
    r.physical = r.params.eps > 0.0 && r.params.b > 0.0;
    return r;
}

CouplingTerms coupling_terms(std::size_t k, const NetworkState& st, const CouplingConfig& cfg, double theta2) {
    if (!(theta2 < 0.0)) throw ValidationError("coupling_terms: theta2 < 0 required");
    const double s = std::sqrt(-3.0 * theta2);
    const std::size_t n = cfg.adjacency.n;
    CouplingTerms out;
    for (std::size_t j = 0; j < n; ++j) {
        if (!cfg.adjacency.at(k, j)) continue;
        const double dy = st.y[j] - st.y[k];
        const double dv = st.v[j] - st.v[k];
        out.y += cfg.b_uu * dy + cfg.b_uv / s * dv;
        out.v += cfg.b_vu * s * dy + cfg.b_vv * dv;
    }
    out.y *= cfg.sigma;
    out.v *= cfg.sigma;
    return out;
}

void network_rhs(std::span<const double> y, std::span<const double> v, const Theta& theta,
                 const CouplingConfig& cfg, double i_ext, std::span<double> dy, std::span<double> dv) {
    const std::size_t n = cfg.adjacency.n;
    if (y.size() != n || v.size() != n || dy.size() != n || dv.size() != n)
        throw ValidationError("network_rhs: state size must match adjacency dimension");
    if (!(theta[1] < 0.0)) throw ValidationError("network_rhs: theta2 < 0 required");

    const double s = std::sqrt(-3.0 * theta[1]);
    const double eps = 1.0 - theta[0] - theta[2]; // = eps by construction
    const double const_v = -theta[4] * s / static_cast<double>(n) + (1.0 - theta[0]) * i_ext; // = -eps*a
    const double buv = cfg.b_uv / s;
    const double bvu = cfg.b_vu * s;

    for (std::size_t k = 0; k < n; ++k) {
        double cy = 0.0, cv = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!cfg.adjacency.at(k, j)) continue;
            const double ddy = y[j] - y[k];
            const double ddv = v[j] - v[k];
            cy += cfg.b_uu * ddy + buv * ddv;
            cv += bvu * ddy + cfg.b_vv * ddv;
        }
        const double yk = y[k];
        dy[k] = yk + theta[1] * yk * yk * yk - v[k] / s + i_ext / s + cfg.sigma * cy;
        dv[k] = eps * s * yk + const_v + (theta[0] - 1.0) * v[k] + cfg.sigma * cv;
    }
}

NetworkState network_rhs(const NetworkState& st, const Theta& theta, const CouplingConfig& cfg, double i_ext) {
    NetworkState d;
    d.y.resize(st.y.size());
    d.v.resize(st.v.size());
    network_rhs(st.y, st.v, theta, cfg, i_ext, d.y, d.v);
    return d;
}

} // namespace fhn
