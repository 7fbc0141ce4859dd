#include "fsq/render.hpp"

#include <array>
#include <sstream>

namespace fsq {

std::string render_pbm(const CellGrid& grid, PbmFormat format) {
  const std::int64_t side = grid.side();
  std::string out = (format == PbmFormat::kBinary ? "P4\n" : "P1\n") + std::to_string(side) + " " +
                    std::to_string(side) + "\n";
  for (std::int64_t row = 0; row < side; ++row) {
    const std::int64_t b = side - 1 - row;
    if (format == PbmFormat::kAscii) {
      for (std::int64_t a = 0; a < side; ++a) {
        if (a) out += ' ';
        out += grid.present(a, b) ? '1' : '0';
      }
      out += '\n';
      continue;
    }
    // P4 rows are padded to whole bytes, most significant bit first.
    for (std::int64_t a0 = 0; a0 < side; a0 += 8) {
      unsigned char byte = 0;
      for (int bit = 0; bit < 8 && a0 + bit < side; ++bit) {
        if (grid.present(a0 + bit, b)) byte |= static_cast<unsigned char>(0x80u >> bit);
      }
      out += static_cast<char>(byte);
    }
  }
  return out;
}

std::string render_components_svg(const LabelledGrid& grid) {
  static constexpr std::array<const char*, 12> kPalette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << grid.width << "\" height=\""
      << grid.height << "\" viewBox=\"0 0 " << grid.width << ' ' << grid.height
      << "\" shape-rendering=\"crispEdges\">\n";
  for (std::int64_t j = 0; j < grid.height; ++j) {
    for (std::int64_t i = 0; i < grid.width; ++i) {
      const std::int32_t id = grid.labels[static_cast<std::size_t>(j * grid.width + i)];
      if (id < 0) continue;
      out << "<rect x=\"" << i << "\" y=\"" << (grid.height - 1 - j)
          << "\" width=\"1\" height=\"1\" fill=\"" << kPalette[static_cast<std::size_t>(id) % kPalette.size()]
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fsq
