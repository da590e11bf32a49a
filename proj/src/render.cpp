#include "apollo/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace apollo {

LabelMode parse_label_mode(const std::string& text) {
  if (text == "none") return LabelMode::none;
  if (text == "curvature") return LabelMode::curvature;
  if (text == "symbol") return LabelMode::symbol;
  throw Error(ErrorKind::InvalidConfig, "unknown label mode '" + text + "' (expected none, curvature or symbol)");
}

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Circle {
  double cx, cy, r;
};

Circle circle_of(const DiskSymbol<double>& s) {
  const double r = 1.0 / s(kBeta);
  return {s(kXr) * r, s(kYr) * r, std::abs(r)};
}

Viewport padded(Viewport v, double fraction) {
  const double px = v.width() * fraction, py = v.height() * fraction;
  return {v.xmin - px, v.ymin - py, v.xmax + px, v.ymax + py};
}

struct Mapping {
  Viewport v;
  double scale, offx, offy;
  double x(double wx) const { return offx + (wx - v.xmin) * scale; }
  double y(double wy) const { return offy + (v.ymax - wy) * scale; }
};

std::string float_symbol_label(const DiskSymbol<double>& s, int digits) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.*f, %.*f)/(%.*f, %.*f)", digits, s(0), digits, s(1), digits, s(2), digits, s(3));
  return buf;
}

}  // namespace

Viewport auto_viewport(const Packing& p) {
  bool found = false;
  Viewport box{INFINITY, INFINITY, -INFINITY, -INFINITY};
  auto extend = [&](const Circle& c) {
    box.xmin = std::min(box.xmin, c.cx - c.r);
    box.xmax = std::max(box.xmax, c.cx + c.r);
    box.ymin = std::min(box.ymin, c.cy - c.r);
    box.ymax = std::max(box.ymax, c.cy + c.r);
    found = true;
  };
  for (const auto& d : p.disks)
    if (d.approx(kBeta) < 0) extend(circle_of(d.approx));
  if (!found) {
    for (const auto& d : p.disks)
      if (d.depth == 0 && d.approx(kBeta) > 0) extend(circle_of(d.approx));
  }
  if (!found) return {-1, -1, 1, 1};
  return padded(box, 0.05);
}

std::string curvature_label(const PackedDisk& d, int digits) {
  if (d.exact) {
    const FieldElement& b = (*d.exact)(kBeta);
    if (b.is_integer()) return b.coeff(0).get_num().get_str();
    return to_decimal(b, digits);
  }
  const double b = d.approx(kBeta);
  const double rounded = std::nearbyint(b);
  char buf[64];
  if (std::abs(b - rounded) <= 1e-9 * std::max(1.0, std::abs(b))) {
    std::snprintf(buf, sizeof buf, "%.0f", rounded == 0 ? 0.0 : rounded);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", digits, b);
  }
  return buf;
}

std::string render_svg(const Packing& p, const RenderOptions& o) {
  if (p.disks.empty()) throw Error(ErrorKind::EmptyPacking, "nothing to render");
  if (o.width_px <= 0 || o.height_px <= 0) throw Error(ErrorKind::InvalidConfig, "image size must be positive");
  const Viewport v = o.viewport ? *o.viewport : auto_viewport(p);
  if (!(v.width() > 0) || !(v.height() > 0)) throw Error(ErrorKind::InvalidConfig, "viewport must have positive area");

  const double w = o.width_px, h = o.height_px;
  const double scale = std::min(w / v.width(), h / v.height());
  const Mapping m{v, scale, (w - v.width() * scale) / 2, (h - v.height() * scale) / 2};

  std::ostringstream disks, outlines, lines, labels;
  auto label = [&](double x, double y, double size, const std::string& text) {
    labels << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size) << "\">" << text
           << "</text>\n";
  };

  for (const auto& d : p.disks) {
    const auto& s = d.approx;
    if (s(kBeta) == 0) {
      // Boundary {p : p . n = s}, clipped to the viewport (Liang-Barsky).
      const double nx = s(kXr), ny = s(kYr), off = s(kGamma) / 2;
      const double px = off * nx, py = off * ny, dx = -ny, dy = nx;
      double t0 = -INFINITY, t1 = INFINITY;
      bool visible = true;
      auto clip = [&](double q, double lo, double hi, double dir) {
        if (dir == 0) {
          visible = visible && q >= lo && q <= hi;
          return;
        }
        double a = (lo - q) / dir, b = (hi - q) / dir;
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
      };
      clip(px, v.xmin, v.xmax, dx);
      clip(py, v.ymin, v.ymax, dy);
      if (!visible || t0 > t1) continue;
      lines << "<line x1=\"" << num(m.x(px + t0 * dx)) << "\" y1=\"" << num(m.y(py + t0 * dy)) << "\" x2=\""
            << num(m.x(px + t1 * dx)) << "\" y2=\"" << num(m.y(py + t1 * dy)) << "\"/>\n";
      continue;
    }
    const Circle c = circle_of(s);
    const double r_px = c.r * scale;
    if (r_px < o.min_px) continue;
    if (s(kBeta) < 0) {
      outlines << "<circle cx=\"" << num(m.x(c.cx)) << "\" cy=\"" << num(m.y(c.cy)) << "\" r=\"" << num(r_px)
               << "\"/>\n";
      continue;
    }
    if (!intersects(d, v)) continue;
    disks << "<circle cx=\"" << num(m.x(c.cx)) << "\" cy=\"" << num(m.y(c.cy)) << "\" r=\"" << num(r_px) << "\"/>\n";
    if (o.labels == LabelMode::curvature && r_px >= 8) {
      label(m.x(c.cx), m.y(c.cy), std::min(r_px * 0.8, 48.0), curvature_label(d, o.decimal_digits));
    } else if (o.labels == LabelMode::symbol && r_px >= 30) {
      const std::string text =
          d.exact ? to_pretty_string(*d.exact) : float_symbol_label(s, o.decimal_digits);
      label(m.x(c.cx), m.y(c.cy), std::min(2.4 * r_px / std::max<double>(8, static_cast<double>(text.size())), 24.0),
            text);
    }
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width_px << "\" height=\""
      << o.height_px << "\" viewBox=\"0 0 " << o.width_px << " " << o.height_px << "\">\n"
      << "<rect width=\"" << o.width_px << "\" height=\"" << o.height_px << "\" fill=\"white\"/>\n"
      << "<g fill=\"" << o.fill << "\" stroke=\"" << o.stroke << "\" stroke-width=\"" << num(o.stroke_width)
      << "\">\n"
      << disks.str() << "</g>\n"
      << "<g fill=\"none\" stroke=\"" << o.stroke << "\" stroke-width=\"" << num(o.stroke_width * 2) << "\">\n"
      << outlines.str() << lines.str() << "</g>\n";
  if (o.labels != LabelMode::none) {
    svg << "<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#111\">\n"
        << labels.str() << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// --- Text reports ----------------------------------------------------------------

std::string chain_table(ChainKind kind, long from, long to, int digits, SpiralFrame frame) {
  if (from > to) throw Error(ErrorKind::InvalidConfig, "--from must not exceed --to");
  std::ostringstream out;
  if (kind == ChainKind::zigzag) {
    out << "# zigzag D_n = (2 F_n phi^n, 1)/(2 phi^(2n), 2 F_n^2)\n";
    out << "n\tsymbol\tdiameter\ttangency_x\n";
    for (long n = from; n <= to; ++n) {
      const ZigzagDisk d = zigzag_disk(n);
      out << n << '\t' << to_pretty_string(d.symbol) << '\t' << to_decimal(zigzag_diameter(n), digits) << '\t'
          << to_decimal(zigzag_tangency(n), digits) << '\n';
    }
  } else {
    out << "# spiral r_n = rho^n, z_n = (1 + rho)((rho omega)^n - 1)/(rho omega - 1)"
        << (frame == SpiralFrame::figure ? ", rotated by omega" : "") << "\n";
    out << "n\tsymbol\tcx\tcy\tr\n";
    for (long n = from; n <= to; ++n) {
      const SpiralDisk d = spiral_disk(n, frame);
      out << n << '\t' << to_pretty_string(d.symbol) << '\t' << to_decimal(d.center.re, digits) << '\t'
          << to_decimal(d.center.im, digits) << '\t' << to_decimal(d.radius, digits) << '\n';
    }
  }
  return out.str();
}

std::string constants_report(int digits) {
  const GoldenConstants& g = constants();
  const auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  const auto dec = [digits](const FieldElement& x) { return to_decimal(x, digits); };
  const auto cplx = [&](const ComplexFieldElement& z) {
    std::string im = dec(z.im);
    return dec(z.re) + (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "i";
  };
  std::ostringstream out;
  out << "phi    = " << to_pretty_string(g.phi) << " ~ " << dec(g.phi) << "   phi^2 = phi + 1: "
      << ok(g.phi * g.phi == g.phi + FieldElement(1)) << "\n";
  out << "tau    = " << to_pretty_string(g.tau) << " ~ " << dec(g.tau) << "   phi tau = 1: "
      << ok(g.phi * g.tau == FieldElement(1)) << "\n";
  out << "sqrt5  = " << to_pretty_string(g.sqrt5) << " ~ " << dec(g.sqrt5) << "   sqrt5^2 = 5: "
      << ok(g.sqrt5 * g.sqrt5 == FieldElement(5)) << "\n";
  out << "rho    = " << to_pretty_string(g.rho) << " ~ " << dec(g.rho) << "   rho rho_bar = 1: "
      << ok(g.rho * g.rho_bar == FieldElement(1)) << "\n";
  out << "omega  = " << cplx(g.omega) << "   |omega|^2 = 1: " << ok(g.omega.norm() == FieldElement(1))
      << "   sextic(omega) = 0: " << ok(sextic_eval(g.omega).is_zero()) << "\n";
  out << "rho omega = " << cplx(g.rho_omega) << "   = (1 + sqrt tau)(-1 + sqrt phi i): "
      << ok(g.rho_omega == ComplexFieldElement(FieldElement(1) + g.sqrt_tau) *
                               ComplexFieldElement(FieldElement(-1), g.sqrt_phi))
      << "\n";
  const TurnAngleReport t = turn_angle_checks();
  char theta[64];
  std::snprintf(theta, sizeof theta, "%.*f", std::max(2, std::min(digits, 12)), t.theta_degrees);
  out << "theta  = " << theta << " deg   -conj(omega) = " << cplx(t.minus_omega_conj)
      << "   cos theta = tau: " << ok(t.real_part_is_tau) << "   tan^2 theta = phi: " << ok(t.tan_squared_is_phi)
      << "   cos theta = -tau: " << (t.printed_cos_sign_conflict ? "false" : "true") << "\n";
  out << "kepler triangle 1 : sqrt phi : phi: " << ok(kepler_triangle_ok()) << "\n";
  const WedgeReport w = wedge_checks();
  out << "wedge  cos alpha = 1/3   1 + 8 = 9: " << ok(w.zigzag_triangle_ok) << "\n";
  out << "wedge  cos beta = 1/phi^3 = " << to_pretty_string(w.spiral_cosine) << " ~ " << dec(w.spiral_cosine)
      << "   1 + 4 phi^3 = phi^6: " << ok(w.spiral_triangle_ok) << "\n";
  out << "spiral center z_-inf = " << cplx(spiral_center()) << "\n";
  out << "zigzag limit x_inf = 1/sqrt5 ~ " << dec(zigzag_limit()(0)) << "\n";
  return out.str();
}

}  // namespace apollo
