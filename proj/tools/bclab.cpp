// Command-line laboratory for Bernoulli convolutions: exact orbits, address
// curves, intersection certificates, densities and unique-address scans.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bclab/classify.hpp"
#include "bclab/density.hpp"
#include "bclab/factor.hpp"
#include "bclab/io.hpp"
#include "bclab/unique.hpp"

namespace {

using namespace bclab;

// --- small expression parser for points in Q(beta): rational linear
// combinations of powers of b (= beta) and t (= 1/beta), e.g. "(18-3*b)/29".
struct PointParser {
  const std::string& s;
  size_t pos = 0;
  std::shared_ptr<const NumberField> fld;

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos != s.size()) throw std::invalid_argument("trailing input in point expression");
    return v;
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  FieldElement term() {
    FieldElement v = factor();
    while (true) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v * factor().inverse();
      else
        return v;
    }
  }

  FieldElement factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      FieldElement v = expr();
      if (!eat(')')) throw std::invalid_argument("missing ) in point expression");
      return maybe_pow(v);
    }
    if (pos < s.size() && (s[pos] == 'b' || s[pos] == 't')) {
      char var = s[pos++];
      FieldElement base = var == 'b' ? fld->beta() : fld->beta_inv();
      return maybe_pow(base);
    }
    // number: integer or decimal
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (start == pos) throw std::invalid_argument("point expression parse error");
    std::string tok = s.substr(start, pos - start);
    auto dot = tok.find('.');
    BigRat q;
    if (dot == std::string::npos) {
      q = BigRat(BigInt(tok));
    } else {
      std::string ip = tok.substr(0, dot), fp = tok.substr(dot + 1);
      BigInt num(ip.empty() ? "0" : ip);
      BigInt den = 1;
      for (char c : fp) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      q = BigRat(num, den);
    }
    return maybe_pow(fld->from_rational(q));
  }

  FieldElement maybe_pow(FieldElement base) {
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("missing exponent");
      int e = std::stoi(s.substr(start, pos - start));
      FieldElement v = fld->one();
      for (int i = 0; i < e; ++i) v = v * base;
      return v;
    }
    return base;
  }
};

FieldElement parse_point(const std::string& s, const std::shared_ptr<const NumberField>& fld) {
  PointParser p{s, 0, fld};
  return p.parse();
}

BigRat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  auto dot = s.find('.');
  if (dot == std::string::npos) return BigRat(BigInt(s));
  std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
  BigInt num(ip.empty() ? "0" : ip);
  BigInt den = 1;
  for (char c : fp) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad rational: " + s);
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return BigRat(num, den);
}

// the unique real root > 1 of the polynomial
AlgebraicNumber beta_of(const std::string& poly_str) {
  IntPoly p = IntPoly::parse(poly_str);
  auto roots = isolate_real_roots(p, BigRat(1), BigRat(1000000));
  if (roots.empty()) throw std::invalid_argument("polynomial has no real root > 1");
  if (roots.size() > 1)
    throw std::invalid_argument("polynomial has several roots > 1; give the minimal polynomial");
  return AlgebraicNumber::select_root(p, roots[0]);
}

struct Output {
  std::string path;
  std::ostringstream buf;
  ~Output() = default;
  std::ostream& os() { return buf; }
  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file " + path);
      f << buf.str();
    }
  }
};

std::string fmt_interval(const RatInterval& iv) {
  return "[" + fmt_double(to_double(iv.lo)) + ", " + fmt_double(to_double(iv.hi)) + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bclab: Bernoulli convolution laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, format = "text", kernel = "auto";
  long coeff_height = long(1) << 16;
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "text|csv|json|dot|pgm|pgm16|ppm");
  app.add_option("--kernel", kernel, "density kernel: auto|scalar|avx2");
  app.add_option("--coeff-height", coeff_height, "orbit coefficient height cap in bits");

  // classify
  auto* c_classify = app.add_subcommand("classify", "classify the root >1 of a polynomial");
  c_classify->fallthrough();
  std::string poly_str;
  c_classify->add_option("poly", poly_str, "integer polynomial, e.g. x^2-x-1 or [c0,c1,...]")
      ->required();

  // orbit
  auto* c_orbit = app.add_subcommand("orbit", "finite orbit of a point under {g0,g1}");
  c_orbit->fallthrough();
  std::string orbit_poly, orbit_point;
  int max_vertices = 10000;
  c_orbit->add_option("poly", orbit_poly, "minimal polynomial of beta")->required();
  c_orbit->add_option("point", orbit_point, "point expression, e.g. (18-3*b)/29 or t^2+t^4")
      ->required();
  c_orbit->add_option("--max-vertices", max_vertices, "vertex cap (default 10000)");

  // mixture
  auto* c_mixture = app.add_subcommand("mixture", "Fibonacci prime cycle mixture");
  c_mixture->fallthrough();
  int mixture_k = 2;
  c_mixture->add_option("k", mixture_k, "k >= 2 (period 2k-1)")->required();

  // markov
  auto* c_markov = app.add_subcommand("markov", "Markov partition of a finite orbit");
  c_markov->fallthrough();
  std::string markov_poly, markov_point, markov_p0 = "1/2";
  c_markov->add_option("poly", markov_poly)->required();
  c_markov->add_option("point", markov_point)->required();
  c_markov->add_option("--p0", markov_p0, "probability of branch 0 (rational)");
  c_markov->add_option("--max-vertices", max_vertices);

  // curve
  auto* c_curve = app.add_subcommand("curve", "rational closed form of an address curve");
  c_curve->fallthrough();
  std::string curve_b;
  c_curve->add_option("b", curve_b, "bit sequence: .011overline{10} or 11/24")->required();

  // tstar
  auto* c_tstar = app.add_subcommand("tstar", "overlap entry parameter t*(b)");
  c_tstar->fallthrough();
  std::string tstar_b;
  int tstar_bits = 0;
  c_tstar->add_option("b", tstar_b, "bit sequence, or 'kl' for the Komornik-Loreti point")
      ->required();
  c_tstar->add_option("--bits", tstar_bits, "interval precision for prefix input (default 20)");

  // intersect
  auto* c_intersect = app.add_subcommand("intersect", "intersection certificates of two curves");
  c_intersect->fallthrough();
  std::string int_b, int_c, int_lo = "1/2", int_hi = "31/50";
  c_intersect->add_option("b", int_b)->required();
  c_intersect->add_option("c", int_c)->required();
  c_intersect->add_option("--lo", int_lo, "range low (rational)");
  c_intersect->add_option("--hi", int_hi, "range high (rational)");

  // network
  auto* c_network = app.add_subcommand("network", "network-parameter solver");
  c_network->fallthrough();
  std::vector<std::string> network_cs;
  c_network->add_option("constraints", network_cs, "path,cycle,target (target self|reflection)")
      ->required()
      ->expected(-2);

  // density
  auto* c_density = app.add_subcommand("density", "histogram approximation of nu_t");
  c_density->fallthrough();
  std::string density_t;
  int density_bins = 4000, density_iters = 0;
  c_density->add_option("t", density_t, "parameter in [0.5, 1)")->required();
  c_density->add_option("--bins", density_bins);
  c_density->add_option("--iters", density_iters, "0 = default schedule");

  // grid
  auto* c_grid = app.add_subcommand("grid", "two-dimensional density grid");
  c_grid->fallthrough();
  std::string grid_tmin, grid_tmax;
  int grid_nt = 64, grid_bins = 512, grid_iters = 0;
  double grid_vmax = 0;
  c_grid->add_option("tmin", grid_tmin)->required();
  c_grid->add_option("tmax", grid_tmax)->required();
  c_grid->add_option("--nt", grid_nt);
  c_grid->add_option("--bins", grid_bins);
  c_grid->add_option("--iters", grid_iters);
  c_grid->add_option("--vmax", grid_vmax, "display ceiling for pgm/ppm");

  // holes
  auto* c_holes = app.add_subcommand("holes", "hole words of the itinerary Cantor set S_b");
  c_holes->fallthrough();
  std::string holes_b;
  int holes_depth = 8;
  c_holes->add_option("b", holes_b)->required();
  c_holes->add_option("--depth", holes_depth);

  // scan-two-address
  auto* c_scan = app.add_subcommand("scan-two-address", "points with two/countable addresses");
  c_scan->fallthrough();
  std::string scan_lo, scan_hi;
  std::vector<std::string> scan_catalog;
  c_scan->add_option("lo", scan_lo)->required();
  c_scan->add_option("hi", scan_hi)->required();
  c_scan->add_option("--catalog", scan_catalog,
                     "bit sequences (default: 2^-k/3 and 1-2^-k/3 families, k<=6)");
  c_scan->add_option("--max-vertices", max_vertices);

  // central
  auto* c_central = app.add_subcommand("central", "parameters where 1/2 has two addresses");
  c_central->fallthrough();
  std::string central_lo, central_hi;
  int central_depth = 6;
  c_central->add_option("lo", central_lo)->required();
  c_central->add_option("hi", central_hi)->required();
  c_central->add_option("--depth", central_depth, "period-doubling catalog depth");
  c_central->add_option("--max-vertices", max_vertices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  Output out;
  out.path = out_path;
  try {
    set_kernel_override(kernel);

    if (*c_classify) {
      AlgebraicNumber a = beta_of(poly_str);
      NumberClass nc = classify(a);
      if (format == "json") {
        out.os() << "{\"poly\":\"" << a.minpoly().to_string() << "\",\"root\":"
                 << fmt_double(a.to_double()) << ",\"class\":\"" << to_string(nc.tag)
                 << "\",\"pisot\":" << (nc.is_pisot ? "true" : "false")
                 << ",\"salem\":" << (nc.is_salem ? "true" : "false")
                 << ",\"garsia\":" << (nc.is_garsia ? "true" : "false")
                 << ",\"perron\":" << (nc.is_perron ? "true" : "false")
                 << ",\"weak_perron\":" << (nc.is_weak_perron ? "true" : "false")
                 << ",\"witness\":\"" << nc.witness << "\"}\n";
      } else {
        out.os() << "minimal polynomial: " << a.minpoly().to_string() << "\n"
                 << "root:               " << fmt_double(a.to_double()) << "\n"
                 << "class:              " << to_string(nc.tag) << "\n"
                 << "witness:            " << nc.witness << "\n";
      }
    } else if (*c_orbit) {
      AlgebraicNumber beta = beta_of(orbit_poly);
      auto fld = NumberField::make(beta);
      FieldElement x = parse_point(orbit_point, fld);
      OrbitOptions opts;
      opts.max_vertices = max_vertices;
      opts.coeff_height_bits = size_t(coeff_height);
      OrbitGraph g = finite_orbit(x, opts);
      if (format == "dot") {
        write_orbit_dot(out.os(), g);
      } else if (format == "json") {
        write_orbit_json(out.os(), g);
      } else {
        out.os() << "beta = " << fmt_double(beta.to_double()) << ", vertices = "
                 << g.vertices.size() << ", closed = " << (g.closed ? "yes" : "no") << "\n";
        if (g.closed) {
          IntMatrix s = successor_matrix(g);
          RatInterval rho = growth_rate(s);
          DimBounds d = local_dimension(2, beta, rho);
          out.os() << "growth rate rho in " << fmt_interval(rho) << "\n"
                   << "local dimension ~ " << fmt_double(d.mid()) << "\n";
        }
      }
    } else if (*c_mixture) {
      FibonacciMixture fm = fibonacci_mixture(mixture_k, max_vertices);
      if (format == "dot") {
        out.os() << "// words:";
        for (const auto& w : fm.words) out.os() << " " << word_to_string(w);
        out.os() << "\n";
        write_orbit_dot(out.os(), fm.graph);
      } else if (format == "json") {
        out.os() << "{\"words\":[";
        for (size_t i = 0; i < fm.words.size(); ++i)
          out.os() << (i ? "," : "") << "\"" << word_to_string(fm.words[i]) << "\"";
        out.os() << "],\"vertices\":" << fm.graph.vertices.size() << "}\n";
      } else {
        out.os() << fm.words.size() << " words of length " << fm.words[0].size() << ":";
        for (const auto& w : fm.words) out.os() << " " << word_to_string(w);
        out.os() << "\norbit vertices: " << fm.graph.vertices.size() << "\n";
        IntMatrix s = successor_matrix(fm.graph);
        out.os() << "growth rate in " << fmt_interval(growth_rate(s)) << "\n";
      }
    } else if (*c_markov) {
      AlgebraicNumber beta = beta_of(markov_poly);
      auto fld = NumberField::make(beta);
      FieldElement x = parse_point(markov_point, fld);
      OrbitOptions opts;
      opts.max_vertices = max_vertices;
      opts.coeff_height_bits = size_t(coeff_height);
      OrbitGraph g = finite_orbit(x, opts);
      if (!g.closed) throw resource_error("orbit did not close within the vertex cap");
      BigRat p0 = parse_rational(markov_p0);
      MarkovPartition mp = markov_partition(g, {p0, 1 - p0});
      if (format == "csv") {
        out.os() << "k,lo,hi,w\n";
        for (size_t k = 0; k + 1 < mp.cut_points.size(); ++k)
          out.os() << k << "," << fmt_double(mp.cut_points[k].to_double()) << ","
                   << fmt_double(mp.cut_points[k + 1].to_double()) << ","
                   << mp.stationary[k].str() << "\n";
      } else {
        out.os() << "intervals: " << mp.stationary.size() << "\n";
        for (size_t k = 0; k + 1 < mp.cut_points.size(); ++k)
          out.os() << "  J_" << k + 1 << " = [" << fmt_double(mp.cut_points[k].to_double()) << ", "
                   << fmt_double(mp.cut_points[k + 1].to_double())
                   << "]  w = " << mp.stationary[k].str() << " ~ "
                   << fmt_double(to_double(mp.stationary[k])) << "\n";
      }
    } else if (*c_curve) {
      BitSeq b = BitSeq::parse(curve_b);
      AddressCurve ac = rational_form(b);
      if (format == "json") {
        out.os() << "{\"address\":\"" << b.to_string() << "\",\"value\":\"" << b.value().str()
                 << "\",\"num\":\"" << ac.num.to_string("t") << "\",\"den\":\""
                 << ac.den.to_string("t") << "\"}\n";
      } else {
        out.os() << "address " << b.to_string() << " = " << b.value().str() << "\n"
                 << "y_b(t) = (" << ac.num.to_string("t") << ") / (" << ac.den.to_string("t")
                 << ")\n";
      }
    } else if (*c_tstar) {
      if (tstar_b == "kl") {
        int bits = tstar_bits > 0 ? tstar_bits : 20;
        RatInterval iv = komornik_loreti(bits);
        out.os() << "t_KL in " << fmt_interval(iv) << "\n"
                 << "beta_KL in [" << fmt_double(1 / to_double(iv.hi)) << ", "
                 << fmt_double(1 / to_double(iv.lo)) << "]\n";
      } else {
        BitSeq b = BitSeq::parse(tstar_b);
        AlgebraicNumber ts = t_star(b);
        if (format == "json") {
          out.os() << "{\"b\":\"" << b.to_string() << "\",\"tstar\":" << fmt_double(ts.to_double())
                   << ",\"minpoly\":\"" << ts.minpoly().to_string("t") << "\",\"beta_minpoly\":\""
                   << ts.reciprocal().minpoly().to_string() << "\"}\n";
        } else {
          out.os() << "t*(" << b.to_string() << ") = " << fmt_double(ts.to_double())
                   << "  minimal polynomial " << ts.minpoly().to_string("t") << "\n"
                   << "beta = " << fmt_double(1 / ts.to_double()) << "  minimal polynomial "
                   << ts.reciprocal().minpoly().to_string() << "\n";
        }
      }
    } else if (*c_intersect) {
      BitSeq b = BitSeq::parse(int_b), c = BitSeq::parse(int_c);
      RatInterval range(parse_rational(int_lo), parse_rational(int_hi));
      auto rs = curve_intersection(b, c, range);
      if (format == "json")
        write_intersections_jsonl(out.os(), rs);
      else
        write_intersections_csv(out.os(), rs);
    } else if (*c_network) {
      std::vector<NetworkConstraint> cs;
      for (const auto& s : network_cs) cs.push_back(NetworkConstraint::parse(s));
      auto rs = network_parameter(cs);
      if (format == "json")
        write_intersections_jsonl(out.os(), rs);
      else
        write_intersections_csv(out.os(), rs);
    } else if (*c_density) {
      BigRat t = parse_rational(density_t);
      double td = to_double(t);
      int iters = density_iters > 0 ? density_iters : default_iters(td, density_bins);
      Histogram h = approximate(td, density_bins, iters);
      if (format == "csv" || format == "text")
        write_histogram_csv(out.os(), h);
      else
        throw std::invalid_argument("density supports csv output");
    } else if (*c_grid) {
      double tmin = to_double(parse_rational(grid_tmin));
      double tmax = to_double(parse_rational(grid_tmax));
      PhiGrid g = phi_grid(tmin, tmax, grid_nt, grid_bins, grid_iters);
      if (format == "pgm")
        write_grid_pgm(out.os(), g, 8, grid_vmax);
      else if (format == "pgm16")
        write_grid_pgm(out.os(), g, 16, grid_vmax);
      else if (format == "ppm")
        write_grid_ppm(out.os(), g, grid_vmax);
      else
        write_grid_csv(out.os(), g);
    } else if (*c_holes) {
      BitSeq b = BitSeq::parse(holes_b);
      HoleSystem hs = holes(b, holes_depth);
      write_holes_csv(out.os(), hs);
    } else if (*c_scan) {
      RatInterval range(parse_rational(scan_lo), parse_rational(scan_hi));
      std::vector<BitSeq> catalog;
      if (scan_catalog.empty()) {
        for (int k = 0; k <= 6; ++k) {
          BitWord pre(k, 0);
          catalog.emplace_back(pre, word_from_string("01"));
          catalog.push_back(catalog.back().complemented());
        }
      } else {
        for (const auto& s : scan_catalog) catalog.push_back(BitSeq::parse(s));
      }
      auto rs = two_address_scan(range, catalog, max_vertices);
      if (format == "json")
        write_two_address_jsonl(out.os(), rs);
      else
        write_two_address_csv(out.os(), rs);
    } else if (*c_central) {
      RatInterval range(parse_rational(central_lo), parse_rational(central_hi));
      auto rs = central_point_params(range, central_depth, max_vertices);
      if (format == "json")
        write_two_address_jsonl(out.os(), rs);
      else
        write_two_address_csv(out.os(), rs);
    }
    out.flush();
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
