#include "pushtrack/spectral.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

#include "pushtrack/errors.hpp"

namespace pushtrack {

namespace {

std::vector<std::vector<int>> positivity_digraph(const IntMatrix& m) {
    const int d = m.dim();
    std::vector<std::vector<int>> adj(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (m.at(i, j) > 0) adj[static_cast<size_t>(i)].push_back(j);
    return adj;
}

int reach_count(const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

}  // namespace

bool is_primitive(const IntMatrix& m) {
    const int d = m.dim();
    if (d == 0) return false;
    const auto adj = positivity_digraph(m);
    std::vector<std::vector<int>> radj(static_cast<size_t>(d));
    for (int u = 0; u < d; ++u)
        for (int v : adj[static_cast<size_t>(u)]) radj[static_cast<size_t>(v)].push_back(u);
    if (reach_count(adj) != d || reach_count(radj) != d) return false;

    // Period of a strongly connected digraph: gcd of level[u]+1-level[v]
    // over all edges u->v of a BFS tree from any vertex.
    std::vector<long long> level(static_cast<size_t>(d), -1);
    std::deque<int> queue{0};
    level[0] = 0;
    long long g = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (level[static_cast<size_t>(v)] < 0) {
                level[static_cast<size_t>(v)] = level[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
            g = std::gcd(g, level[static_cast<size_t>(u)] + 1 - level[static_cast<size_t>(v)]);
        }
    }
    return g == 1;
}

bool is_primitive_bruteforce(const IntMatrix& m) {
    const int d = m.dim();
    if (d == 0) return false;
    std::vector<bool> base(static_cast<size_t>(d) * d), p(base.size());
    bool any = false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const bool v = m.at(i, j) > 0;
            base[static_cast<size_t>(i) * d + j] = v;
            p[static_cast<size_t>(i) * d + j] = v;
            any = any || v;
        }
    if (!any) return false;
    const int limit = (d - 1) * (d - 1) + 1;  // Wielandt exponent bound
    for (int k = 1; k <= limit; ++k) {
        bool all = true;
        for (bool v : p) all = all && v;
        if (all) return true;
        std::vector<bool> next(p.size(), false);
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (!p[static_cast<size_t>(i) * d + l]) continue;
                for (int j = 0; j < d; ++j)
                    if (base[static_cast<size_t>(l) * d + j]) next[static_cast<size_t>(i) * d + j] = true;
            }
        p = std::move(next);
    }
    bool all = true;
    for (bool v : p) all = all && v;
    return all;
}

Int row_sum_bound(const IntMatrix& m) { return m.max_row_sum(); }

int iteration_cap_from_env() {
    if (const char* env = std::getenv("PUSHTRACK_ITER_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    return default_iteration_cap();
}

SpectralEnclosure pf_enclosure(const IntMatrix& m, const Rat& tol,
                               const std::optional<std::vector<Int>>& seed,
                               int iteration_cap) {
    const int d = m.dim();
    if (!is_primitive(m)) fail(ErrorKind::NotPrimitive, "matrix is not Perron-Frobenius");
    if (tol <= Rat(0)) fail(ErrorKind::BadParameters, "tolerance must be positive");

    std::vector<Int> x;
    if (seed) {
        x = *seed;
        if (static_cast<int>(x.size()) != d)
            fail(ErrorKind::BadParameters, "seed dimension mismatch");
        for (const Int& v : x)
            if (v <= 0) fail(ErrorKind::BadParameters, "seed must be strictly positive");
    } else {
        x.assign(static_cast<size_t>(d), Int(1));
    }

    SpectralEnclosure out;
    out.primitive = true;
    for (int it = 1; it <= iteration_cap; ++it) {
        const std::vector<Int> y = m * x;
        Rat lo(y[0], x[0]), hi(y[0], x[0]);
        for (int i = 1; i < d; ++i) {
            const Rat r(y[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
            if (r < lo) lo = r;
            if (r > hi) hi = r;
        }
        out.lo = lo;
        out.hi = hi;
        out.iterations = it;
        out.history.emplace_back(lo, hi);
        if (hi - lo <= tol) {
            out.converged = true;
            return out;
        }
        // Keep iterates integral with gcd 1 so the arithmetic stays exact
        // without unbounded coordinate growth.
        Int g = 0;
        for (const Int& v : y) g = boost::multiprecision::gcd(g, v);
        x.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / g;
    }
    out.converged = false;
    return out;
}

}  // namespace pushtrack
