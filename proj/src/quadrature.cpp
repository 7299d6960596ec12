#include "wkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "adaptive.hpp"
#include "filon.hpp"

namespace wkl {

using detail::AdaptiveParams;
using detail::NodeSample;

double resolve_omega_max(const QuadConfig& cfg, double omega1) {
    if (cfg.omega_max > 0.0) return cfg.omega_max;
    return std::max(1e6, 1e3 * omega1);
}

namespace detail {

std::vector<double> presplit_bounded(double a, double b, double osc_freq,
                                     std::size_t max_panels) {
    std::vector<double> bp;
    if (osc_freq > 0.0) {
        const double target = 0.25 * M_PI / osc_freq;
        std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / target));
        n = std::clamp<std::size_t>(n, 1, max_panels);
        bp.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            bp.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n));
        return bp;
    }
    bp = {a, b};
    return bp;
}

std::vector<double> presplit_geometric(double a, double omega_max, double osc_freq) {
    std::vector<double> bp{a};
    double h = 0.25 * std::max(std::abs(a), 1.0);
    if (osc_freq > 0.0) h = std::min(h, 0.25 * M_PI / osc_freq);
    double x = a;
    while (x + h < omega_max) {
        x += h;
        bp.push_back(x);
        h *= 2.0;
    }
    bp.push_back(omega_max);
    return bp;
}

// geometric grading from the left edge; resolves integrable endpoint behavior
// and unit-scale structure without deep bisection
std::vector<double> graded_left(double a, double b, double osc_freq) {
    std::vector<double> bp{a};
    double w = b - a;
    double h = std::min(1.0, w) / 64.0;
    double x = a;
    while (x + h < b) {
        x += h;
        bp.push_back(x);
        h *= 2.0;
    }
    bp.push_back(b);
    if (osc_freq > 0.0) {
        // refine any panel wider than the oscillation pre-split target
        const double target = 0.25 * M_PI / osc_freq;
        std::vector<double> out{bp.front()};
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            double lo = bp[i], hi = bp[i + 1];
            auto sub = presplit_bounded(lo, hi, osc_freq);
            out.insert(out.end(), sub.begin() + 1, sub.end());
        }
        return out;
    }
    return bp;
}

}  // namespace detail

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadConfig& cfg) {
    QuadResult qr;
    if (!(a < b)) return qr;
    AdaptiveParams prm;
    prm.rel_tol = cfg.rel_tol;
    prm.abs_tol = cfg.abs_tol;
    prm.max_depth = cfg.max_depth;
    prm.max_evals = cfg.max_evals ? cfg.max_evals : 2'000'000;
    auto node = [&f](double x) { return NodeSample{f(x), 0.0, 0.0, 1, false}; };
    auto bp = detail::presplit_bounded(a, b, cfg.osc_freq);
    auto res = detail::adaptive_gk(node, bp, prm);
    qr.value = res.value;
    qr.err_estimate = res.err + res.side_err;
    qr.abs_integral = res.absval;
    qr.evaluations = res.evals;
    qr.depth_exhausted = res.exhausted;
    return qr;
}

OscResult integrate_osc(const std::function<double(double)>& g, double a, double b,
                        double lambda, const QuadConfig& cfg) {
    struct OPanel {
        double a, b, err;
        std::complex<double> val;
        int depth;
        bool operator<(const OPanel& o) const { return err < o.err; }
    };
    OscResult out;
    if (!(a < b)) return out;

    std::size_t evals = 0;
    auto eval = [&](double pa, double pb, int depth) {
        double gs[detail::kNodes15];
        for (int j = 0; j < detail::kNodes15; ++j) gs[j] = g(detail::panel_node(pa, pb, j));
        evals += detail::kNodes15;
        auto mom = detail::filon_moments(detail::filon_alpha(pa, pb, lambda));
        auto pv = detail::filon_panel(gs, pa, pb, lambda, mom);
        return OPanel{pa, pb, pv.err, pv.value, depth};
    };

    std::priority_queue<OPanel> heap;
    std::complex<double> val{0.0, 0.0};
    double err = 0.0, fin_err = 0.0;
    heap.push(eval(a, b, 0));
    val = heap.top().val;
    err = heap.top().err;
    const std::size_t budget = cfg.max_evals ? cfg.max_evals : 500'000;
    while (!heap.empty()) {
        if (err + fin_err <= std::max(cfg.rel_tol * std::abs(val), cfg.abs_tol)) break;
        if (evals >= budget) break;
        OPanel top = heap.top();
        heap.pop();
        if (top.depth >= cfg.max_depth) {
            fin_err += top.err;
            err -= top.err;
            continue;
        }
        val -= top.val;
        err -= top.err;
        double m = 0.5 * (top.a + top.b);
        auto l = eval(top.a, m, top.depth + 1);
        auto r = eval(m, top.b, top.depth + 1);
        val += l.val + r.val;
        err += l.err + r.err;
        heap.push(std::move(l));
        heap.push(std::move(r));
    }
    out.value = val;
    out.err_estimate = err + fin_err;
    out.evaluations = evals;
    return out;
}

namespace {

struct InnerSetup {
    std::vector<double> breakpoints;
    bool truncated = false;  // semi-infinite, truncated at omega_max
};

InnerSetup inner_breakpoints(PieceId piece, double omega1, double w3, double omega_max,
                             double osc_freq) {
    InnerSetup s;
    switch (piece) {
        case PieceId::D21:
            // inner variable is omega2 in [0, w3]
            s.breakpoints = detail::graded_left(0.0, w3, osc_freq);
            return s;
        case PieceId::D22:
            s.breakpoints = detail::presplit_bounded(2.0 * w3 - omega1, w3, osc_freq);
            return s;
        case PieceId::D3:
            s.breakpoints = detail::presplit_geometric(omega1, omega_max, osc_freq);
            s.truncated = true;
            return s;
        case PieceId::D1:
            s.breakpoints = detail::presplit_geometric(w3, omega_max, osc_freq);
            s.truncated = true;
            return s;
    }
    return s;
}

}  // namespace

QuadResult integrate_piece_w2(PieceId piece, double omega1,
                              const std::function<double(double, double, double)>& integrand,
                              const QuadConfig& cfg) {
    QuadResult qr;
    if (!(omega1 > 0.0)) return qr;
    const double Omega = resolve_omega_max(cfg, omega1);
    const bool inner_is_w2 = (piece == PieceId::D21 || piece == PieceId::D22);

    AdaptiveParams inner_prm;
    inner_prm.rel_tol = std::max(cfg.rel_tol * 0.3, 1e-13);
    inner_prm.abs_tol = 0.0;  // outer tolerance governs; avoid absolute cutoffs inside
    inner_prm.max_depth = cfg.max_depth;
    inner_prm.max_evals = 120'000;

    std::size_t tail_probes = 0;
    auto inner_at = [&](double w3, double rel_override) {
        NodeSample ns;
        auto prm = inner_prm;
        if (rel_override > 0.0) prm.rel_tol = rel_override;
        auto setup = inner_breakpoints(piece, omega1, w3, Omega, cfg.osc_freq);
        auto node = [&](double t) {
            double w2, w4;
            if (inner_is_w2) {
                w2 = t;
                w4 = omega1 + w2 - w3;
            } else {
                w4 = t;
                w2 = w3 + w4 - omega1;
            }
            if (w2 < 0.0) w2 = 0.0;
            return NodeSample{integrand(w3, w4, w2), 0.0, 0.0, 1, false};
        };
        auto res = detail::adaptive_gk(node, setup.breakpoints, prm);
        ns.value = res.value;
        ns.side_err = res.err + res.side_err;
        ns.evals = res.evals;
        ns.side_exhausted = res.exhausted;
        if (setup.truncated) {
            auto absf = [&](double x) {
                ++tail_probes;
                double w2 = x + w3 - omega1;
                if (w2 < 0.0) w2 = 0.0;
                return std::abs(integrand(w3, x, w2));
            };
            double lo = inner_is_w2 ? 0.0 : (piece == PieceId::D1 ? w3 : omega1);
            auto te = detail::tail_from_decay(absf, Omega, lo);
            ns.side_tail = te.tail;
        }
        return ns;
    };

    auto outer = piece_outer_range(piece, omega1);
    double outer_hi = outer.hi_unbounded ? Omega : outer.hi;

    std::vector<double> obp;
    if (piece == PieceId::D1)
        obp = detail::presplit_geometric(outer.lo, outer_hi, cfg.osc_freq);
    else if (piece == PieceId::D22)
        obp = detail::presplit_bounded(outer.lo, outer_hi, cfg.osc_freq);
    else
        obp = detail::graded_left(outer.lo, outer_hi, cfg.osc_freq);

    AdaptiveParams outer_prm;
    outer_prm.rel_tol = cfg.rel_tol;
    outer_prm.abs_tol = cfg.abs_tol;
    outer_prm.max_depth = cfg.max_depth;
    outer_prm.max_evals = cfg.max_evals ? cfg.max_evals : 20'000'000;

    auto node = [&](double w3) { return inner_at(w3, 0.0); };
    auto res = detail::adaptive_gk(node, obp, outer_prm);

    qr.value = res.value;
    qr.err_estimate = res.err + res.side_err;
    qr.abs_integral = res.absval;
    qr.evaluations = res.evals + tail_probes;
    qr.depth_exhausted = res.exhausted;
    qr.tail_bound = res.tail;

    if (piece == PieceId::D1) {
        // outer truncation at Omega
        auto absF = [&](double w3) { return std::abs(inner_at(w3, 1e-3).value); };
        auto te = detail::tail_from_decay(absF, Omega, omega1);
        qr.tail_bound += te.tail;
    }
    if (qr.tail_bound > cfg.rel_tol * std::abs(qr.value)) qr.tail_insufficient = true;
    return qr;
}

QuadResult integrate_piece(PieceId piece, double omega1,
                           const std::function<double(double, double)>& integrand,
                           const QuadConfig& cfg) {
    return integrate_piece_w2(
        piece, omega1,
        [&integrand](double w3, double w4, double) { return integrand(w3, w4); }, cfg);
}

}  // namespace wkl
