// Heap-driven global adaptive Gauss-Kronrod 7/15 integration core, templated
// on the node evaluator so the iterated 2D paths can carry inner-quadrature
// error and evaluation counts through the outer rule.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "filon.hpp"
#include "wkl/quadrature.hpp"

namespace wkl::detail {

struct NodeSample {
    double value = 0.0;
    double side_err = 0.0;        // error carried by the sample (inner quadrature)
    double side_tail = 0.0;       // truncation mass carried by the sample
    std::size_t evals = 1;        // integrand evaluations behind the sample
    bool side_exhausted = false;  // inner budget exhaustion
};

struct AdaptiveParams {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_depth = 40;
    std::size_t max_evals = 5'000'000;
    /// Accept convergence once err <= rel_tol * cancel_floor * |f|-mass as well;
    /// keeps heavily cancelling integrands from chasing an unreachable target.
    double cancel_floor = 0.03;
};

struct Panel {
    double a, b;
    double val15, err, absval;
    double side_err, side_tail;
    bool side_exhausted;
    int depth;

    bool operator<(const Panel& o) const { return err + side_err < o.err + o.side_err; }
};

template <class F>
Panel eval_panel(F&& f, double a, double b, int depth, std::size_t& eval_budget_used) {
    const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    double v7 = 0.0, v15 = 0.0, av = 0.0;
    double serr = 0.0, stail = 0.0;
    bool sexh = false;
    for (int j = 0; j < kNodes15; ++j) {
        NodeSample s = f(mid + h * kKronrodX[j]);
        eval_budget_used += s.evals;
        v15 += kKronrodW[j] * s.value;
        av += kKronrodW[j] * std::abs(s.value);
        serr += kKronrodW[j] * s.side_err;
        stail += kKronrodW[j] * s.side_tail;
        sexh |= s.side_exhausted;
        if (j & 1) v7 += kGauss7W[j / 2] * s.value;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.val15 = h * v15;
    p.absval = h * av;
    p.err = h * std::abs(v15 - v7);
    p.side_err = h * serr;
    p.side_tail = h * stail;
    p.side_exhausted = sexh;
    p.depth = depth;
    return p;
}

struct AdaptiveOutcome {
    double value = 0.0;
    double err = 0.0;       // rule error
    double side_err = 0.0;  // accumulated inner error
    double tail = 0.0;
    double absval = 0.0;
    std::size_t evals = 0;
    bool exhausted = false;
};

/// f: double -> NodeSample. Breakpoints must be sorted and bracket the range.
template <class F>
AdaptiveOutcome adaptive_gk(F&& f, const std::vector<double>& breakpoints,
                            const AdaptiveParams& prm) {
    AdaptiveOutcome out;
    if (breakpoints.size() < 2) return out;

    std::priority_queue<Panel> heap;
    double val = 0.0, err = 0.0, absval = 0.0, side_err = 0.0, side_tail = 0.0;
    std::size_t used = 0;
    bool exhausted = false;

    auto push = [&](Panel&& p) {
        val += p.val15;
        err += p.err;
        absval += p.absval;
        side_err += p.side_err;
        side_tail += p.side_tail;
        exhausted |= p.side_exhausted;
        heap.push(std::move(p));
    };

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] <= breakpoints[i]) continue;
        push(eval_panel(f, breakpoints[i], breakpoints[i + 1], 0, used));
    }

    // finalized panels keep contributing their sums; only the heap is refined
    double fin_err = 0.0, fin_side = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    auto toltarget = [&]() {
        double t = std::max(prm.rel_tol * std::abs(val), prm.abs_tol);
        t = std::max(t, prm.rel_tol * prm.cancel_floor * absval);
        return t;
    };

    while (!heap.empty()) {
        double tot_err = err + side_err;
        if (tot_err <= toltarget()) break;
        if (used >= prm.max_evals) {
            exhausted = true;
            break;
        }
        Panel top = heap.top();
        // roundoff-limited or depth-capped panels are final
        bool roundoff = top.err <= 100.0 * eps * top.absval + 1e-305;
        if (top.depth >= prm.max_depth || roundoff ||
            top.b - top.a < 64.0 * eps * (std::abs(top.a) + std::abs(top.b))) {
            heap.pop();
            fin_err += top.err;
            fin_side += top.side_err;
            err -= top.err;
            side_err -= top.side_err;
            if (!roundoff && top.depth >= prm.max_depth) exhausted = true;
            if (heap.empty()) break;
            continue;
        }
        heap.pop();
        val -= top.val15;
        err -= top.err;
        absval -= top.absval;
        side_err -= top.side_err;
        side_tail -= top.side_tail;
        double m = 0.5 * (top.a + top.b);
        push(eval_panel(f, top.a, m, top.depth + 1, used));
        push(eval_panel(f, m, top.b, top.depth + 1, used));
    }

    out.value = val;
    out.err = err + fin_err;
    out.side_err = side_err + fin_side;
    out.tail = side_tail;
    out.absval = absval;
    out.evals = used;
    out.exhausted = exhausted;
    return out;
}

/// Initial breakpoints for [a, b]: honors the oscillation pre-split contract
/// (width <= pi/(4 N)) up to a panel cap; otherwise a single panel.
std::vector<double> presplit_bounded(double a, double b, double osc_freq,
                                     std::size_t max_panels = (1u << 18));

/// Geometric breakpoints for a truncated semi-infinite range [a, omega_max]:
/// doubling widths from a leading panel of scale max(|a|, 1).
std::vector<double> presplit_geometric(double a, double omega_max, double osc_freq);

/// Decay-based tail estimate at the truncation point: fits |f| ~ x^p from two
/// probes and integrates the extrapolation. Returns (tail, credible).
struct TailEstimate {
    double tail = 0.0;
    bool credible = true;
};
template <class G>
TailEstimate tail_from_decay(G&& absf, double omega_max, double range_lo = 0.0) {
    TailEstimate te;
    double x1 = std::max(0.7 * omega_max, omega_max - 0.3 * (omega_max - range_lo));
    double x2 = omega_max;
    double f1 = absf(x1), f2 = absf(x2);
    if (f2 <= 0.0) {
        te.tail = 0.0;
        return te;
    }
    if (f1 <= 0.0) {
        te.tail = f2 * omega_max;
        te.credible = false;
        return te;
    }
    double p = std::log(f2 / f1) / std::log(x2 / x1);
    if (p >= -1.2) {
        te.tail = f2 * omega_max;
        te.credible = false;
        return te;
    }
    te.tail = f2 * omega_max / (-p - 1.0);
    return te;
}

}  // namespace wkl::detail
