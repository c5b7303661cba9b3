#include "mudom/prober.hpp"

#include <cmath>
#include <deque>
#include <random>

namespace mudom {

std::pair<int, int> raster_topology(const std::vector<std::uint8_t>& grid,
                                    int width, int height) {
    if ((int)grid.size() != width * height)
        throw std::invalid_argument("raster_topology: size mismatch");

    std::vector<int> label((size_t)width * height, 0);
    auto at = [&](int r, int c) { return grid[(size_t)(r * width + c)]; };
    auto lab = [&](int r, int c) -> int& {
        return label[(size_t)(r * width + c)];
    };

    auto flood = [&](int r0, int c0, int mark, std::uint8_t value, bool diag) {
        std::deque<std::pair<int, int>> q{{r0, c0}};
        lab(r0, c0) = mark;
        while (!q.empty()) {
            auto [r, c] = q.front();
            q.pop_front();
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    if (!diag && dr != 0 && dc != 0) continue;
                    int rr = r + dr, cc = c + dc;
                    if (rr < 0 || rr >= height || cc < 0 || cc >= width) continue;
                    if (at(rr, cc) != value || lab(rr, cc) != 0) continue;
                    lab(rr, cc) = mark;
                    q.emplace_back(rr, cc);
                }
        }
    };

    int components = 0;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (at(r, c) == 1 && lab(r, c) == 0) flood(r, c, ++components, 1, false);

    // complement: components not touching the frame are holes
    std::fill(label.begin(), label.end(), 0);
    int comp_marks = 0;
    std::vector<bool> touches_frame;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (at(r, c) == 0 && lab(r, c) == 0) {
                flood(r, c, ++comp_marks, 0, true);
                touches_frame.push_back(false);
            }
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            bool frame = (r == 0 || r == height - 1 || c == 0 || c == width - 1);
            if (frame && at(r, c) == 0) touches_frame[(size_t)lab(r, c) - 1] = true;
        }
    int holes = 0;
    for (bool f : touches_frame)
        if (!f) ++holes;
    return {components, holes};
}

SectionMap line_section_scan(const MemberFn& oracle, const CPoint& basepoint,
                             const CPoint& direction, Window window,
                             int resolution) {
    if (basepoint.size() != direction.size())
        throw std::invalid_argument("line_section_scan: length mismatch");
    double dmax = 0.0;
    for (const auto& v : direction) dmax = std::max(dmax, std::abs(v));
    if (dmax == 0.0)
        throw std::invalid_argument("line_section_scan: zero direction");
    if (resolution < 2)
        throw std::invalid_argument("line_section_scan: resolution too small");
    if (resolution > 2048)
        throw budget_error("line_section_scan: raster exceeds the size cap");

    SectionMap map;
    map.basepoint = basepoint;
    map.direction = direction;
    map.window = window;
    map.resolution = resolution;
    map.grid.assign((size_t)resolution * resolution, 0);

    const double dre = (window.re_hi - window.re_lo) / resolution;
    const double dim = (window.im_hi - window.im_lo) / resolution;
    CPoint x(basepoint.size());
    for (int r = 0; r < resolution; ++r) {
        double im = window.im_lo + (r + 0.5) * dim;
        for (int c = 0; c < resolution; ++c) {
            double re = window.re_lo + (c + 0.5) * dre;
            Complex lam{re, im};
            for (size_t i = 0; i < x.size(); ++i)
                x[i] = basepoint[i] + lam * direction[i];
            auto m = oracle(x);
            if (m.status == Membership::Inside)
                map.grid[(size_t)(r * resolution + c)] = 1;
            else if (m.status == Membership::Undetermined)
                ++map.undetermined_cells;
        }
    }
    auto [comps, holes] = raster_topology(map.grid, resolution, resolution);
    map.components = comps;
    map.holes = holes;
    return map;
}

SectionMap line_section_scan(const DomainHandle& handle, const CPoint& basepoint,
                             const CPoint& direction, Window window,
                             int resolution) {
    return line_section_scan(
        [&](const CPoint& x) { return member(handle, x); }, basepoint, direction,
        window, resolution);
}

std::optional<StarlikeWitness> starlike_witness_search(const DomainHandle& handle,
                                                       long long budget,
                                                       std::uint64_t seed) {
    if (budget < 1)
        throw std::invalid_argument("starlike_witness_search: budget >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ugauge(0.9, 0.999);
    long long calls = 0;
    const int t_grid = 48;

    for (std::uint64_t attempt = 0; calls < budget; ++attempt) {
        CPoint x0 = sample_member(handle, rng(), 0.95);
        auto g = minkowski(handle, x0, 1e-4);
        calls += 40;  // gauge bisection cost, approximate
        if (g.value <= 0.0 || g.widened) continue;

        // push to a gauge in [0.9, 1) where nonconvexity lives
        double target = ugauge(rng);
        CPoint x = quasibalanced_act(handle.table.degrees,
                                     Complex{target / g.value, 0.0}, x0);
        if (member(handle, x).status != Membership::Inside) {
            ++calls;
            continue;
        }
        ++calls;

        for (int k = 1; k < t_grid && calls < budget; ++k) {
            double t = (double)k / t_grid;
            CPoint tx(x.size());
            for (size_t i = 0; i < x.size(); ++i) tx[i] = t * x[i];
            auto m = member(handle, tx);
            ++calls;
            if (m.status != Membership::Outside) continue;

            // re-verify both endpoints, by both methods where available
            auto mi = member(handle, x);
            if (mi.status != Membership::Inside) break;
            if (psi_recursive_applicable(handle.table)) {
                auto gi = member_with_method(handle, x, MemberMethod::CertifiedGrid);
                auto go = member_with_method(handle, tx, MemberMethod::CertifiedGrid);
                calls += 10;
                if (gi.status != Membership::Inside ||
                    go.status != Membership::Outside)
                    continue;
            }
            StarlikeWitness w;
            w.x = x;
            w.t = t;
            w.member_margin = mi.margin;
            w.outside_margin = m.margin;
            return w;
        }
    }
    return std::nullopt;
}

SeparatorReport verify_separator(const DomainHandle& handle,
                                 const AffineFunctional& functional, int samples,
                                 std::uint64_t seed) {
    SeparatorReport rep;
    rep.samples = samples;
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        CPoint x = sample_member(handle, seed + (std::uint64_t)i, 0.95);
        lo = std::min(lo, std::abs(functional(x)));
    }
    rep.min_modulus = lo;
    rep.pass = lo > 1e-9;
    return rep;
}

}  // namespace mudom
