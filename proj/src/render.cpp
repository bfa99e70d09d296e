#include "trilights/render.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "trilights/error.hpp"

namespace trilights {

namespace {

void require_length(const gf2::BitVector& v, int n) {
  if (n < 1 || n > kMaxBoardSize) throw Error(ErrorKind::size, "board size out of range: " + std::to_string(n));
  if (v.size() != static_cast<std::size_t>(button_count(n))) {
    throw Error(ErrorKind::shape, "vector length " + std::to_string(v.size()) + " does not match beta(" +
                                      std::to_string(n) + ") = " + std::to_string(button_count(n)));
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Point {
  double x;
  double y;
};

class SvgCanvas {
 public:
  SvgCanvas(int n, const SvgOptions& options) : n_(n), opt_(options), st_(options.style) {}

  Point center(RowCol rc) const {
    return {st_.margin + st_.radius + (rc.col - 1 - (rc.row - 1) / 2.0 + (n_ - 1) / 2.0) * st_.spacing,
            st_.margin + st_.radius + (rc.row - 1) * st_.row_height};
  }

  // Fill per cell; `extra` draws before the circles.
  std::string render(const std::function<const char*(int)>& fill, const std::string& extra,
                     const std::function<bool(int)>& dark_text) const {
    const BoardGeometry board(n_);
    const double width = 2 * (st_.margin + st_.radius) + (n_ - 1) * st_.spacing;
    const double height = 2 * (st_.margin + st_.radius) + (n_ - 1) * st_.row_height;
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    if (!opt_.title.empty()) s += "<title>" + escape(opt_.title) + "</title>\n";
    s += extra;
    s += "<g stroke=\"" + std::string(st_.stroke) + "\" stroke-width=\"1.5\">\n";
    for (int c = 0; c < board.beta(); ++c) {
      const Point p = center(board.rowcol(c));
      s += "<circle id=\"b" + std::to_string(c + 1) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"" + num(st_.radius) + "\" fill=\"" + fill(c) + "\"/>\n";
    }
    s += "</g>\n";
    if (opt_.show_ids) {
      s += "<g font-family=\"sans-serif\" font-size=\"" + num(st_.radius * 0.9) + "\" text-anchor=\"middle\">\n";
      for (int c = 0; c < board.beta(); ++c) {
        const Point p = center(board.rowcol(c));
        s += "<text x=\"" + num(p.x) + "\" y=\"" + num(p.y + st_.radius * 0.3) + "\" fill=\"" +
             (dark_text(c) ? "#000000" : "#666666") + "\">" + std::to_string(c + 1) + "</text>\n";
      }
      s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
  }

  // Capsule around the given centres; a full ring when a == b.
  std::string pill(Point a, Point b) const {
    const double rho = st_.radius + 3.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    std::string d;
    if (len == 0.0) {
      d = "M " + num(a.x - rho) + " " + num(a.y) + " A " + num(rho) + " " + num(rho) + " 0 1 0 " +
          num(a.x + rho) + " " + num(a.y) + " A " + num(rho) + " " + num(rho) + " 0 1 0 " + num(a.x - rho) +
          " " + num(a.y) + " Z";
    } else {
      const double nx = -dy / len * rho;
      const double ny = dx / len * rho;
      d = "M " + num(a.x + nx) + " " + num(a.y + ny) + " L " + num(b.x + nx) + " " + num(b.y + ny) + " A " +
          num(rho) + " " + num(rho) + " 0 0 0 " + num(b.x - nx) + " " + num(b.y - ny) + " L " + num(a.x - nx) +
          " " + num(a.y - ny) + " A " + num(rho) + " " + num(rho) + " 0 0 0 " + num(a.x + nx) + " " +
          num(a.y + ny) + " Z";
    }
    return "<path class=\"part\" d=\"" + d + "\" fill=\"none\" stroke=\"" + st_.stroke + "\" stroke-width=\"2\"/>\n";
  }

  const SvgStyle& style() const { return st_; }

 private:
  int n_;
  const SvgOptions& opt_;
  const SvgStyle& st_;
};

}  // namespace

std::string to_text(const gf2::BitVector& v, int n) {
  require_length(v, n);
  std::string out;
  std::size_t i = 0;
  for (int r = 1; r <= n; ++r) {
    out.append(static_cast<std::size_t>(n - r), ' ');
    for (int k = 1; k <= r; ++k, ++i) {
      if (k != 1) out += ' ';
      out += v.get(i) ? "●" : "○";
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const gf2::BitVector& v, int n, const SvgOptions& options) {
  require_length(v, n);
  const SvgCanvas canvas(n, options);
  const auto& st = canvas.style();
  return canvas.render([&](int c) { return v.get(static_cast<std::size_t>(c)) ? st.on_fill : st.off_fill; }, "",
                       [&](int c) { return !v.get(static_cast<std::size_t>(c)); });
}

std::string to_svg(const Covering& cov, const SvgOptions& options) {
  if (!validate_covering(cov)) throw Error(ErrorKind::precondition, "cannot render an invalid covering");
  const SvgCanvas canvas(cov.n, options);
  const BoardGeometry board(cov.n);
  std::string parts = "<g class=\"covering\">\n";
  for (const auto& part : cov.parts) {
    const Point a = canvas.center(board.rowcol(part.front() - 1));
    const Point b = canvas.center(board.rowcol(part.back() - 1));
    parts += canvas.pill(a, b);
  }
  parts += "</g>\n";
  const auto& st = canvas.style();
  return canvas.render([&](int) { return st.off_fill; }, parts, [](int) { return true; });
}

std::string to_svg(const BlockLayout& layout, const std::optional<PressSet>& overlay, const SvgOptions& options) {
  if (overlay && overlay->size() != layout.m) {
    throw Error(ErrorKind::shape, "overlay is for n = " + std::to_string(overlay->size()) + ", layout has m = " +
                                      std::to_string(layout.m));
  }
  const SvgCanvas canvas(layout.m, options);
  const auto& st = canvas.style();
  std::vector<const char*> fills(static_cast<std::size_t>(button_count(layout.m)), st.off_fill);
  for (const Block& b : layout.blocks) {
    const char* f = st.block_fills[b.orientation == Orientation::upright ? 0 : 1];
    for (int c : b.cells) fills[c] = f;
  }
  return canvas.render(
      [&](int c) {
        if (overlay && overlay->bits().get(static_cast<std::size_t>(c))) return st.on_fill;
        return fills[c];
      },
      "", [](int) { return true; });
}

}  // namespace trilights
