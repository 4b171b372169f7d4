#include "zzc/svg.hpp"

#include <algorithm>
#include <sstream>

namespace zzc {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr int kLeft = 60;
constexpr int kTop = 60;
constexpr int kPlotW = 680;
constexpr int kPlotH = 480;

const char* const kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

const char* colour(int degree) {
  return kPalette[static_cast<std::size_t>(degree < 0 ? 0 : degree) % std::size(kPalette)];
}

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
}

void frame(std::ostringstream& out) {
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW << "\" height=\""
      << kPlotH << "\" fill=\"none\" stroke=\"#888\"/>\n";
}

}  // namespace

std::string diagram_svg(const std::vector<std::pair<int, Diagram>>& by_degree,
                        const StratifiedLine& line) {
  // Slot 0 is -inf, slots 1..S the strata, slot S+1 is +inf.
  const int last = static_cast<int>(line.num_strata()) + 1;
  const auto x = [&](int slot) { return kLeft + slot * kPlotW / last; };
  const auto y = [&](int slot) { return kTop + kPlotH - slot * kPlotH / last; };
  const auto slot = [&](const Endpoint& e) {
    if (e.twice == Endpoint::kNegInf) return 0;
    if (e.twice == Endpoint::kPosInf) return last;
    return static_cast<int>(e.stratum().position()) + 1;
  };

  std::ostringstream out;
  open_svg(out);
  frame(out);
  out << "<line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(last) << "\" y2=\""
      << y(last) << "\" stroke=\"#bbb\"/>\n";
  for (auto s : line.strata()) {
    const int sl = static_cast<int>(s.position()) + 1;
    out << "<text x=\"" << x(sl) << "\" y=\"" << kTop + kPlotH + 20
        << "\" font-size=\"10\" text-anchor=\"middle\">" << s.to_string() << "</text>\n";
  }
  for (const auto& [degree, d] : by_degree) {
    for (const auto& [pt, mult] : d) {
      const int cx = x(slot(pt.birth));
      const int cy = y(slot(pt.death));
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" fill=\"" << colour(degree)
          << "\"/>\n";
      if (mult > 1) {
        out << "<text x=\"" << cx + 7 << "\" y=\"" << cy - 7 << "\" font-size=\"10\">" << mult
            << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string barcode_svg(const std::vector<std::pair<int, Barcode>>& by_degree) {
  std::ostringstream out;
  open_svg(out);
  frame(out);
  std::size_t rows = 0;
  for (const auto& [degree, b] : by_degree) rows += b.total();
  if (rows == 0 || by_degree.empty()) {
    out << "</svg>\n";
    return out.str();
  }
  const int strata = static_cast<int>(by_degree.front().second.line.num_strata());
  const int cell = kPlotW / strata;
  const int pitch = std::clamp(kPlotH / static_cast<int>(rows), 1, 24);
  const int thickness = std::max(1, pitch * 2 / 3);
  int row = 0;
  for (const auto& [degree, b] : by_degree) {
    for (const auto& [iv, mult] : b.bars) {
      const int x0 = kLeft + static_cast<int>(iv.lo.position()) * cell;
      const int x1 = kLeft + (static_cast<int>(iv.hi.position()) + 1) * cell;
      for (std::size_t copy = 0; copy < mult; ++copy, ++row) {
        out << "<rect x=\"" << x0 << "\" y=\"" << kTop + row * pitch << "\" width=\"" << x1 - x0
            << "\" height=\"" << thickness << "\" fill=\"" << colour(degree) << "\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string euler_svg(const K0Class& curve, const StratifiedLine& line) {
  std::ostringstream out;
  open_svg(out);
  frame(out);
  if (curve.coeffs.empty()) {
    out << "</svg>\n";
    return out.str();
  }
  const auto [lo_it, hi_it] = std::minmax_element(curve.coeffs.begin(), curve.coeffs.end());
  const std::int64_t lo = std::min<std::int64_t>(*lo_it, 0);
  const std::int64_t span = std::max<std::int64_t>(*hi_it - lo, 1);
  const int strata = static_cast<int>(curve.coeffs.size());
  const int cell = kPlotW / strata;
  const auto y = [&](std::int64_t v) {
    return kTop + kPlotH - static_cast<int>((v - lo) * (kPlotH - 20) / span) - 10;
  };
  out << "<line x1=\"" << kLeft << "\" y1=\"" << y(0) << "\" x2=\"" << kLeft + kPlotW << "\" y2=\""
      << y(0) << "\" stroke=\"#bbb\"/>\n<polyline fill=\"none\" stroke=\"" << colour(0)
      << "\" stroke-width=\"2\" points=\"";
  for (int i = 0; i < strata; ++i) {
    const int v = y(curve.coeffs[static_cast<std::size_t>(i)]);
    out << (i == 0 ? "" : " ") << kLeft + i * cell << ',' << v << ' ' << kLeft + (i + 1) * cell
        << ',' << v;
  }
  out << "\"/>\n";
  const auto strata_ids = line.strata();
  for (int i = 0; i < strata && static_cast<std::size_t>(i) < strata_ids.size(); ++i) {
    out << "<text x=\"" << kLeft + i * cell + cell / 2 << "\" y=\"" << kTop + kPlotH + 20
        << "\" font-size=\"10\" text-anchor=\"middle\">"
        << strata_ids[static_cast<std::size_t>(i)].to_string() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace zzc
