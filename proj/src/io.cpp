#include "bclab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"

namespace bclab {

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {
double fe_double(const FieldElement& z) { return z.to_double(); }
}  // namespace

void write_intersections_csv(std::ostream& os, const std::vector<IntersectionReport>& rs) {
  os << "b,c,s_float,beta_minpoly,z_float,class,inside_overlap\n";
  for (const auto& r : rs) {
    os << r.label_b << "," << r.label_c << "," << fmt_double(r.s.to_double()) << ",\""
       << r.beta.minpoly().to_string() << "\"," << fmt_double(fe_double(r.z)) << ","
       << to_string(r.number_class.tag) << "," << (r.inside_overlap ? "true" : "false") << "\n";
  }
}

void write_intersections_jsonl(std::ostream& os, const std::vector<IntersectionReport>& rs) {
  for (const auto& r : rs) {
    nlohmann::json j{{"b", r.label_b},
                     {"c", r.label_c},
                     {"s_float", r.s.to_double()},
                     {"beta_minpoly", r.beta.minpoly().to_string()},
                     {"z_float", fe_double(r.z)},
                     {"class", to_string(r.number_class.tag)},
                     {"inside_overlap", r.inside_overlap},
                     {"on_boundary", r.on_boundary},
                     {"realizable", r.realizable},
                     {"witness", r.number_class.witness}};
    os << j.dump() << "\n";
  }
}

void write_two_address_csv(std::ostream& os, const std::vector<TwoAddressReport>& rs) {
  os << "t_float,minpoly,y_float,cardinality,verified\n";
  for (const auto& r : rs) {
    os << fmt_double(r.t.to_double()) << ",\"" << r.beta.minpoly().to_string() << "\","
       << fmt_double(fe_double(r.y)) << "," << to_string(r.cardinality) << ","
       << (r.verified ? "true" : "false") << "\n";
  }
}

void write_two_address_jsonl(std::ostream& os, const std::vector<TwoAddressReport>& rs) {
  for (const auto& r : rs) {
    nlohmann::json j{{"b", r.label_b},          {"c", r.label_c},
                     {"t_float", r.t.to_double()}, {"minpoly", r.beta.minpoly().to_string()},
                     {"y_float", fe_double(r.y)},  {"cardinality", to_string(r.cardinality)},
                     {"verified", r.verified}};
    os << j.dump() << "\n";
  }
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
  os << "bin,x_mid,mass,density\n";
  for (int i = 0; i < h.bins; ++i) {
    double mid = (i + 0.5) / h.bins;
    os << i << "," << fmt_double(mid) << "," << fmt_double(h.mass[i]) << ","
       << fmt_double(h.mass[i] * h.bins) << "\n";
  }
}

void write_grid_csv(std::ostream& os, const PhiGrid& g) {
  os << "t\\x";
  for (int j = 0; j < g.bins; ++j) os << "," << fmt_double((j + 0.5) / g.bins);
  os << "\n";
  for (int i = 0; i < g.nt; ++i) {
    os << fmt_double(g.t_of_row(i));
    for (int j = 0; j < g.bins; ++j) os << "," << fmt_double(g.at(i, j));
    os << "\n";
  }
}

namespace {
double grid_max(const PhiGrid& g) {
  double m = 0;
  for (double v : g.values) m = std::max(m, v);
  return m > 0 ? m : 1.0;
}
}  // namespace

void write_grid_pgm(std::ostream& os, const PhiGrid& g, int bits, double v_max_display) {
  if (bits != 8 && bits != 16) throw std::invalid_argument("pgm bits must be 8 or 16");
  double vmax = v_max_display > 0 ? v_max_display : grid_max(g);
  int maxgray = bits == 8 ? 255 : 65535;
  os << "P5\n" << g.bins << " " << g.nt << "\n" << maxgray << "\n";
  for (int i = 0; i < g.nt; ++i) {
    for (int j = 0; j < g.bins; ++j) {
      double u = g.at(i, j) / vmax;
      long gray = std::lround(u * maxgray);
      gray = std::clamp(gray, 0L, long(maxgray));
      if (bits == 8) {
        unsigned char byte = static_cast<unsigned char>(gray);
        os.write(reinterpret_cast<const char*>(&byte), 1);
      } else {
        unsigned char hi = static_cast<unsigned char>(gray >> 8);
        unsigned char lo = static_cast<unsigned char>(gray & 0xff);
        os.write(reinterpret_cast<const char*>(&hi), 1);
        os.write(reinterpret_cast<const char*>(&lo), 1);
      }
    }
  }
}

void write_grid_ppm(std::ostream& os, const PhiGrid& g, double v_max_display) {
  double vmax = v_max_display > 0 ? v_max_display : grid_max(g);
  os << "P6\n" << g.bins << " " << g.nt << "\n255\n";
  for (int i = 0; i < g.nt; ++i) {
    for (int j = 0; j < g.bins; ++j) {
      double u = std::clamp(g.at(i, j) / vmax, 0.0, 1.0);
      // dark blue (0) -> white (1/2) -> red (1)
      double r, gg, b;
      if (u < 0.5) {
        double s = u * 2;
        r = s;
        gg = s;
        b = 0.5 + 0.5 * s;
      } else {
        double s = (u - 0.5) * 2;
        r = 1.0;
        gg = 1.0 - s;
        b = 1.0 - s;
      }
      unsigned char rgb[3] = {static_cast<unsigned char>(std::lround(r * 255)),
                              static_cast<unsigned char>(std::lround(gg * 255)),
                              static_cast<unsigned char>(std::lround(b * 255))};
      os.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

void write_orbit_dot(std::ostream& os, const OrbitGraph& g) {
  os << "digraph orbit {\n  rankdir=LR;\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << fmt_double(g.vertices[i].to_double()) << "\"";
    if (int(i) == g.root) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << int(e.label) << "\"];\n";
  os << "}\n";
}

void write_orbit_json(std::ostream& os, const OrbitGraph& g) {
  nlohmann::json j;
  j["closed"] = g.closed;
  j["root"] = g.root;
  std::vector<double> vf;
  for (const auto& v : g.vertices) vf.push_back(v.to_double());
  j["vertices_float"] = vf;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, int(e.label)});
  j["edges"] = edges;
  if (g.closed) {
    IntMatrix s = successor_matrix(g);
    RatInterval rho = growth_rate(s);
    j["rho"] = (to_double(rho.lo) + to_double(rho.hi)) / 2;
    DimBounds d = local_dimension(2, g.field->generator(), rho);
    j["local_dim"] = d.mid();
  }
  os << j.dump(2) << "\n";
}

void write_holes_csv(std::ostream& os, const HoleSystem& hs) {
  os << "m,a_m\n";
  for (size_t m = 1; m <= hs.counts.size(); ++m) os << m << "," << hs.counts[m - 1] << "\n";
  os << "word,f_w(J)_lo,f_w(J)_hi\n";
  BigRat b = hs.b.value();
  for (const auto& w : hs.holes) {
    // f_w(J) = [.w + b/2^m, .w + (1-b)/2^m]
    BigInt val = 0;
    for (uint8_t bit : w) val = (val << 1) | int(bit);
    BigRat base(val, BigInt(1) << w.size());
    BigRat lo = base + b / (BigInt(1) << w.size());
    BigRat hi = base + (1 - b) / (BigInt(1) << w.size());
    os << word_to_string(w) << "," << fmt_double(to_double(lo)) << ","
       << fmt_double(to_double(hi)) << "\n";
  }
}

}  // namespace bclab
