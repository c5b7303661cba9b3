#ifndef MUDOM_PROBER_HPP
#define MUDOM_PROBER_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "mudom/domains.hpp"

namespace mudom {

struct Window {
    double re_lo = -1.0, re_hi = 1.0;
    double im_lo = -1.0, im_hi = 1.0;
};

// Raster of one affine complex line against a membership oracle.
struct SectionMap {
    CPoint basepoint;
    CPoint direction;
    Window window;
    int resolution = 0;
    std::vector<std::uint8_t> grid;  // row-major, 1 = Inside
    int components = 0;              // 4-connected Inside components
    int holes = 0;                   // bounded 8-connected complement components
    int undetermined_cells = 0;      // counted as Outside in the raster
};

struct StarlikeWitness {
    CPoint x;        // a member
    double t = 0.0;  // plain scalar with t*x outside
    double member_margin = 0.0;
    double outside_margin = 0.0;
};

struct SeparatorReport {
    int samples = 0;
    double min_modulus = 0.0;
    bool pass = false;
};

using MemberFn = std::function<MembershipResult(const CPoint&)>;

// components / holes of a binary raster; 4-connectivity for the foreground,
// 8-connectivity for the complement.
std::pair<int, int> raster_topology(const std::vector<std::uint8_t>& grid,
                                    int width, int height);

SectionMap line_section_scan(const MemberFn& oracle, const CPoint& basepoint,
                             const CPoint& direction, Window window,
                             int resolution);

SectionMap line_section_scan(const DomainHandle& handle, const CPoint& basepoint,
                             const CPoint& direction, Window window,
                             int resolution);

std::optional<StarlikeWitness> starlike_witness_search(const DomainHandle& handle,
                                                       long long budget,
                                                       std::uint64_t seed);

SeparatorReport verify_separator(const DomainHandle& handle,
                                 const AffineFunctional& functional, int samples,
                                 std::uint64_t seed);

}  // namespace mudom

#endif
