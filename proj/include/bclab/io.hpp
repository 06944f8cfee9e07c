#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bclab/curves.hpp"
#include "bclab/density.hpp"
#include "bclab/orbits.hpp"
#include "bclab/unique.hpp"

namespace bclab {

// Deterministic float formatting (shortest round-trip form, C locale).
std::string fmt_double(double v);

void write_intersections_csv(std::ostream& os, const std::vector<IntersectionReport>& rs);
void write_intersections_jsonl(std::ostream& os, const std::vector<IntersectionReport>& rs);

void write_two_address_csv(std::ostream& os, const std::vector<TwoAddressReport>& rs);
void write_two_address_jsonl(std::ostream& os, const std::vector<TwoAddressReport>& rs);

void write_histogram_csv(std::ostream& os, const Histogram& h);
void write_grid_csv(std::ostream& os, const PhiGrid& g);

// P5 grayscale: gray = clamp(round(maxgray * v / v_max_display)); 16-bit data
// big-endian per the format.  v_max_display <= 0 selects the grid maximum.
void write_grid_pgm(std::ostream& os, const PhiGrid& g, int bits = 8, double v_max_display = 0);
// P6 with the fixed colormap documented in the README (dark blue -> white ->
// red ramp over [0, v_max_display]).
void write_grid_ppm(std::ostream& os, const PhiGrid& g, double v_max_display = 0);

void write_orbit_dot(std::ostream& os, const OrbitGraph& g);
void write_orbit_json(std::ostream& os, const OrbitGraph& g);

void write_holes_csv(std::ostream& os, const HoleSystem& hs);

}  // namespace bclab
