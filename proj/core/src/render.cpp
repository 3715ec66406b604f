#include <string>
#include <vector>

#include "t2/io.hpp"

namespace t2 {
namespace {

const char* glyph(MorGen g) {
  switch (g) {
    case MorGen::cap: return "/\\";
    case MorGen::cup: return "\\/";
    case MorGen::pos: return "X";
    case MorGen::neg: return "X'";
  }
  return "?";
}

std::string bars(int count) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    out += '|';
  }
  return out;
}

void append_line(std::string& svg, int x1, int y1, int x2, int y2) {
  svg += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
         std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
}

void append_arc(std::string& svg, int x1, int x2, int y_flat, int y_bend) {
  int mid = (x1 + x2) / 2;
  svg += "<path d=\"M " + std::to_string(x1) + " " + std::to_string(y_flat) + " Q " +
         std::to_string(mid) + " " + std::to_string(y_bend) + " " + std::to_string(x2) + " " +
         std::to_string(y_flat) + "\"/>\n";
}

// The under strand of a crossing stops short of the middle on both sides.
void append_under(std::string& svg, int x1, int y1, int x2, int y2) {
  int gap = 8;
  int mx = (x1 + x2) / 2;
  int my = (y1 + y2) / 2;
  int dx = x2 > x1 ? gap : -gap;
  append_line(svg, x1, y1, mx - dx, my - gap);
  append_line(svg, mx + dx, my + gap, x2, y2);
}

int x_at(int strand) { return 20 + 40 * strand; }

}  // namespace

std::string render_ascii(const MorNormal& normal) {
  std::string out;
  if (normal.source_width > 0) out += bars(normal.source_width) + "\n";
  for (const Slice& slice : normal.slices) {
    std::string band = bars(slice.left);
    if (!band.empty()) band += ' ';
    band += glyph(slice.gen);
    if (slice.right > 0) band += ' ' + bars(slice.right);
    out += band + "\n";
  }
  return out;
}

std::string render_svg(const MorNormal& normal) {
  int max_width = normal.source_width;
  int width = normal.source_width;
  for (const Slice& slice : normal.slices) {
    width = slice.target_width();
    if (width > max_width) max_width = width;
  }
  int rows = static_cast<int>(normal.slices.size());
  int svg_w = 40 * (max_width > 0 ? max_width : 1);
  int svg_h = 40 * (rows > 0 ? rows : 1);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(svg_w) + "\" height=\"" + std::to_string(svg_h) +
                    "\" stroke=\"black\" fill=\"none\">\n";
  if (rows == 0) {
    for (int s = 0; s < normal.source_width; ++s)
      append_line(svg, x_at(s), 0, x_at(s), svg_h);
    return svg + "</svg>\n";
  }
  for (int row = 0; row < rows; ++row) {
    const Slice& slice = normal.slices[static_cast<size_t>(row)];
    int top = 40 * row;
    int bottom = top + 40;
    int in_left = slice.left + gen_source(slice.gen).width;
    int out_left = slice.left + gen_target(slice.gen).width;
    for (int s = 0; s < slice.left; ++s) append_line(svg, x_at(s), top, x_at(s), bottom);
    for (int s = 0; s < slice.right; ++s)
      append_line(svg, x_at(in_left + s), top, x_at(out_left + s), bottom);
    switch (slice.gen) {
      case MorGen::cap:
        append_arc(svg, x_at(slice.left), x_at(slice.left + 1), bottom, top);
        break;
      case MorGen::cup:
        append_arc(svg, x_at(slice.left), x_at(slice.left + 1), top, bottom);
        break;
      case MorGen::pos:
        append_line(svg, x_at(slice.left), top, x_at(slice.left + 1), bottom);
        append_under(svg, x_at(slice.left + 1), top, x_at(slice.left), bottom);
        break;
      case MorGen::neg:
        append_line(svg, x_at(slice.left + 1), top, x_at(slice.left), bottom);
        append_under(svg, x_at(slice.left), top, x_at(slice.left + 1), bottom);
        break;
    }
  }
  return svg + "</svg>\n";
}

}  // namespace t2
