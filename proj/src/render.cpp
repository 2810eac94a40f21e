#include "braidmono/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "braidmono/extract.hpp"

namespace braidmono {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;
constexpr double kStroke = 2.0;
constexpr double kGapStroke = 7.0;

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  std::string s = os.str();
  if (s == "-0.00") s = "0.00";
  return s;
}

void line(std::ostringstream& os, double x1, double y1, double x2, double y2,
          const std::string& color, double width) {
  os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
     << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << color
     << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

std::string svg_open(double width, double height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
     << num(width) << " " << num(height) << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  return os.str();
}

}  // namespace

std::string render_word_svg(const BraidWord& word) {
  const int n = word.strand_count();
  const int columns = std::max(1, word.length());
  const double margin = 30.0;
  const double lane_gap = 40.0;
  const double col_w = 60.0;
  const double width = 2.0 * margin + columns * col_w;
  const double height = 2.0 * margin + (n - 1) * lane_gap;
  auto lane_y = [&](int lane) { return margin + lane * lane_gap; };

  std::vector<int> ord(n);  // strand occupying each lane
  std::iota(ord.begin(), ord.end(), 0);
  auto color_of = [&](int strand) { return kPalette[strand % kPaletteSize]; };

  std::ostringstream os;
  os << svg_open(width, height);
  for (int c = 0; c < columns; ++c) {
    const double x0 = margin + c * col_w;
    const double x1 = x0 + col_w;
    const int letter =
        c < word.length() ? word.letters()[static_cast<std::size_t>(c)] : 0;
    const int slot = letter == 0 ? -1 : std::abs(letter) - 1;
    for (int lane = 0; lane < n; ++lane) {
      if (lane == slot || lane == slot + 1) continue;
      line(os, x0, lane_y(lane), x1, lane_y(lane), color_of(ord[lane]),
           kStroke);
    }
    if (slot >= 0) {
      const int upper = ord[slot];      // strand on the smaller-y lane
      const int lower = ord[slot + 1];  // strand on the larger-y lane
      // Positive letter: the strand arriving from the larger slot crosses
      // in front; that matches the sign read off the tracked geometry.
      const bool lower_over = letter > 0;
      const double ya = lane_y(slot);
      const double yb = lane_y(slot + 1);
      const double xm = 0.5 * (x0 + x1);
      const double ym = 0.5 * (ya + yb);
      auto half = [&](double xa, double yaa, double xb, double yab,
                      int strand) {
        line(os, xa, yaa, xb, yab, color_of(strand), kStroke);
      };
      if (lower_over) {
        // upper strand goes under: leave a gap around the midpoint
        half(x0, ya, xm - 8.0, ym - 8.0 * (yb - ya) / (x1 - x0), upper);
        half(xm + 8.0, ym + 8.0 * (yb - ya) / (x1 - x0), x1, yb, upper);
        half(x0, yb, x1, ya, lower);
      } else {
        half(x0, yb, xm - 8.0, ym + 8.0 * (yb - ya) / (x1 - x0), lower);
        half(xm + 8.0, ym - 8.0 * (yb - ya) / (x1 - x0), x1, ya, lower);
        half(x0, ya, x1, yb, upper);
      }
      std::swap(ord[slot], ord[slot + 1]);
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_track_svg(const FiberTrack& track, double projection_angle) {
  const int n = track.strand_count();
  const std::size_t samples = track.times.size();
  const double margin = 40.0;
  const double width = 800.0;
  const double height = 400.0;
  const Complex rot(std::cos(-projection_angle), std::sin(-projection_angle));
  auto proj = [&](Complex z) { return (z * rot).real(); };

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (int k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < samples; ++i) {
      const double v = proj(track.strands[k][i]);
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  if (hi - lo < 1e-12) hi = lo + 1.0;
  auto x_of = [&](double t) { return margin + t * (width - 2.0 * margin); };
  auto y_of = [&](double v) {
    return margin + (v - lo) / (hi - lo) * (height - 2.0 * margin);
  };

  std::vector<CrossingEvent> events;
  std::vector<std::vector<int>> ord_before;  // lane occupancy before event
  try {
    ExtractedWord extracted = extract_word(track, projection_angle);
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    for (const CrossingEvent& e : extracted.events) {
      events.push_back(e);
      ord_before.push_back(ord);
      std::swap(ord[e.position], ord[e.position + 1]);
    }
  } catch (const Error&) {
    events.clear();
    ord_before.clear();
  }

  auto polyline = [&](std::ostringstream& os, int strand, double t_from,
                      double t_to, const std::string& color, double stroke) {
    os << "  <polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << num(stroke) << "\" points=\"";
    bool any = false;
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = track.times[i];
      if (t < t_from || t > t_to) continue;
      if (any) os << " ";
      os << num(x_of(t)) << "," << num(y_of(proj(track.strands[strand][i])));
      any = true;
    }
    os << "\"/>\n";
  };

  std::ostringstream os;
  os << svg_open(width, height);
  for (int k = 0; k < n; ++k)
    polyline(os, k, 0.0, 1.0, kPalette[k % kPaletteSize], kStroke);

  // Re-draw the front strand near each crossing on a white underlay so the
  // back strand shows a gap.
  const double window = 0.01;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const CrossingEvent& ev = events[e];
    const std::vector<int>& ord = ord_before[e];
    const int from_upper = ord[ev.position];
    const int from_lower = ord[ev.position + 1];
    const int over = ev.sign > 0 ? from_lower : from_upper;
    const double t0 = std::max(0.0, ev.time - window);
    const double t1 = std::min(1.0, ev.time + window);
    polyline(os, over, t0, t1, "#ffffff", kGapStroke);
    polyline(os, over, t0, t1, kPalette[over % kPaletteSize], kStroke);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace braidmono
