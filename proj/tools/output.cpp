#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "aff/causal.hpp"

namespace cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

JsonObject& JsonObject::number(const std::string& key, double v) {
  if (std::isinf(v))
    fields_.emplace_back(key, v > 0 ? "\"inf\"" : "\"-inf\"");
  else
    fields_.emplace_back(key, format_number(v));
  return *this;
}

JsonObject& JsonObject::boolean(const std::string& key, bool v) {
  fields_.emplace_back(key, v ? "true" : "false");
  return *this;
}

JsonObject& JsonObject::string(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, "\"" + v + "\"");
  return *this;
}

JsonObject& JsonObject::raw(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, v);
  return *this;
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + fields_[i].first + "\": " + fields_[i].second;
  }
  out += "}\n";
  return out;
}

std::string number_array(const std::vector<double>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += format_number(vs[i]);
  }
  return out + "]";
}

std::string csv_table(const std::vector<CsvColumn>& columns) {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ",";
    out += columns[c].name;
  }
  out += "\n";
  const std::size_t rows = columns.empty() ? 0 : columns[0].values.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ",";
      out += format_number(columns[c].values[r]);
    }
    out += "\n";
  }
  return out;
}

namespace {

using Pt = std::pair<double, double>;

struct Box {
  double x0, x1, y0, y1;
};

// clip the segment p + t*d, t in [0, big], to the box; false if empty
bool clip_ray(const Box& b, Pt p, Pt d, Pt& a, Pt& z) {
  double t0 = 0.0, t1 = 1e9;
  auto axis = [&](double p0, double dir, double lo, double hi) {
    if (std::abs(dir) < 1e-300) return p0 >= lo && p0 <= hi;
    double ta = (lo - p0) / dir, tb = (hi - p0) / dir;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    return true;
  };
  if (!axis(p.first, d.first, b.x0, b.x1)) return false;
  if (!axis(p.second, d.second, b.y0, b.y1)) return false;
  if (t0 > t1) return false;
  a = {p.first + t0 * d.first, p.second + t0 * d.second};
  z = {p.first + t1 * d.first, p.second + t1 * d.second};
  return true;
}

// clip a convex polygon by the half-plane n.(p - p0) <= 0
std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, Pt n, double c) {
  auto side = [&](const Pt& p) { return n.first * p.first + n.second * p.second - c; };
  std::vector<Pt> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % poly.size()];
    const double sa = side(a), sb = side(b);
    if (sa <= 0) out.push_back(a);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      const double t = sa / (sa - sb);
      out.push_back({a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)});
    }
  }
  return out;
}

struct Mapper {
  Box box;
  double w = 640, h = 480;
  Pt operator()(const Pt& p) const {
    const double sx = w / (box.x1 - box.x0);
    const double sy = h / (box.y1 - box.y0);
    return {(p.first - box.x0) * sx, h - (p.second - box.y0) * sy};
  }
};

void emit_polyline(std::ostringstream& os, const Mapper& m, const std::vector<Pt>& pts,
                   const char* style) {
  if (pts.size() < 2) return;
  os << "  <polyline fill=\"none\" " << style << " points=\"";
  for (const Pt& p : pts) {
    const Pt s = m(p);
    os << s.first << "," << s.second << " ";
  }
  os << "\"/>\n";
}

}  // namespace

std::string svg_figure(const aff::ProblemSpec& spec, const std::vector<Pt>& payload,
                       bool markers) {
  Box box{-1, 1, 0, 2};
  for (const Pt& p : payload) {
    box.x0 = std::min(box.x0, p.first);
    box.x1 = std::max(box.x1, p.first);
    box.y1 = std::max(box.y1, p.second);
  }
  box.y0 = std::min(0.0, box.y0);
  const double padX = 0.08 * (box.x1 - box.x0 + 1e-9);
  const double padY = 0.08 * (box.y1 - box.y0 + 1e-9);
  box = {box.x0 - padX, box.x1 + padX, box.y0 - padY, box.y1 + padY};

  Mapper m{box};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.w << "\" height=\"" << m.h
     << "\" viewBox=\"0 0 " << m.w << " " << m.h << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // infinite-distance region, shaded (negative curvature only)
  if (spec.curvSign == aff::CurvSign::Neg) {
    const auto B = aff::point_B(spec);
    std::vector<Pt> rect{{box.x0, box.y0}, {box.x1, box.y0}, {box.x1, box.y1}, {box.x0, box.y1}};
    // lambda3(q) < 0 <=> lambda1(q) < lambda1(B), i.e. n1*x + n2*y < n1*Bx
    const double n1 = spec.A.c - spec.A.a, n2 = spec.A.d - spec.A.b;
    const double c = n1 * B[0];
    const auto region = clip_halfplane(rect, {n1, n2}, c);
    if (region.size() >= 3) {
      os << "  <polygon fill=\"#d62728\" fill-opacity=\"0.12\" stroke=\"none\" points=\"";
      for (const Pt& p : region) {
        const Pt s = m(p);
        os << s.first << "," << s.second << " ";
      }
      os << "\"/>\n";
    }
    // frontier ray through B along the lambda1 level line, oriented upward
    Pt a, z;
    const Pt up = n1 > 0 ? Pt{-n2, n1} : Pt{n2, -n1};
    if (clip_ray({box.x0, box.x1, 0.0, box.y1}, {B[0], 0.0}, up, a, z)) {
      const Pt sa = m(a), sz = m(z);
      os << "  <line stroke=\"#ff7f0e\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\" x1=\""
         << sa.first << "\" y1=\"" << sa.second << "\" x2=\"" << sz.first << "\" y2=\""
         << sz.second << "\"/>\n";
    }
  }

  // the absolute
  {
    const Pt a = m({box.x0, 0.0}), z = m({box.x1, 0.0});
    os << "  <line stroke=\"black\" stroke-width=\"1.5\" x1=\"" << a.first << "\" y1=\""
       << a.second << "\" x2=\"" << z.first << "\" y2=\"" << z.second << "\"/>\n";
  }

  // light cone through Id: straight rays with direction (alpha +- beta,
  // gamma +- delta); both time directions shown
  for (int sign : {+1, -1}) {
    const double u1 = spec.alpha + sign * spec.beta;
    const double u2 = spec.gamma + sign * spec.delta;
    for (double orient : {1.0, -1.0}) {
      Pt a, z;
      if (clip_ray({box.x0, box.x1, std::max(0.0, box.y0), box.y1}, {0.0, 1.0},
                   {orient * u1, orient * u2}, a, z)) {
        const Pt sa = m(a), sz = m(z);
        os << "  <line stroke=\"#7f7f7f\" stroke-width=\"1\" stroke-dasharray=\"4 3\" x1=\""
           << sa.first << "\" y1=\"" << sa.second << "\" x2=\"" << sz.first << "\" y2=\""
           << sz.second << "\"/>\n";
      }
    }
  }

  emit_polyline(os, m, payload, "stroke=\"#1f77b4\" stroke-width=\"2\"");
  if (markers) {
    for (const Pt& p : payload) {
      const Pt s = m(p);
      os << "  <circle cx=\"" << s.first << "\" cy=\"" << s.second
         << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cli
