#include "latcover/render.hpp"

#include "latcover/verifier.hpp"

#include <sstream>

namespace latcover {

namespace {

constexpr int kScale = 40;  // pixels per unit after dilation

std::string px(const Rat &x) { return rat_to_decimal(x, 2); }

void circle(std::ostringstream &os, const char *cls, const Rat &cx, const Rat &cy,
            const std::string &r, const char *style) {
  os << "  <circle class=\"" << cls << "\" cx=\"" << px(cx) << "\" cy=\"" << px(-cy)
     << "\" r=\"" << r << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const CoveringCertificate &cert, const Rat &d,
                       const RenderOptions &opt,
                       const std::optional<SqrtInterval> &verified) {
  long long w = opt.window;
  Rat s = Rat(kScale) * d;  // scene unit -> pixels

  bool inside = verified && interval_contains(*verified, SqrtVal::of_rational(d));

  Rat half = Rat(kScale) * (d * w + 1) + 12;
  Rat full = 2 * half;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << px(full) << "\" height=\"" << px(full) << "\" viewBox=\"" << px(-half) << " "
     << px(-half) << " " << px(full) << " " << px(full) << "\">\n";
  os << "  <rect x=\"" << px(-half) << "\" y=\"" << px(-half) << "\" width=\""
     << px(full) << "\" height=\"" << px(full) << "\" fill=\"#ffffff\"/>\n";

  if (opt.show_domain) {
    QPoint o{Rat(0), Rat(0)};
    QPoint u = to_qpoint(cert.lattice.u);
    QPoint v = to_qpoint(cert.lattice.v);
    QPoint uv = u + v;
    os << "  <polygon class=\"domain\" points=\"";
    for (const QPoint &c : {o, u, uv, v}) {
      if (c != o) os << " ";
      os << px(s * c.x) << "," << px(-(s * c.y));
    }
    os << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1.5\""
          " stroke-dasharray=\"6,4\"/>\n";
  }

  auto instances = window_instances(cert, w);

  if (opt.show_disks) {
    std::string r = px(Rat(kScale));
    for (const auto &ins : instances)
      circle(os, "disk", s * ins.center.x, s * ins.center.y, r,
             "fill=\"#dbe9f6\" stroke=\"#5b8ac5\" stroke-width=\"1\"");
  }
  if (opt.show_points) {
    std::string r = px(make_rat(Int(5), Int(2)));
    for (long long x = -w; x <= w; ++x)
      for (long long y = -w; y <= w; ++y)
        circle(os, "dot", s * x, s * y, r, "fill=\"#1f2430\"");
  }
  if (opt.show_centers) {
    std::string r = px(Rat(3));
    for (const auto &ins : instances)
      circle(os, "ctr", s * ins.center.x, s * ins.center.y, r,
             "fill=\"#c0392b\" stroke=\"#ffffff\" stroke-width=\"1\"");
  }

  os << "  <text x=\"" << px(-half + 8) << "\" y=\"" << px(-half + 20)
     << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#1f2430\">"
     << (cert.name.empty() ? "covering" : cert.name) << ", d = " << rat_to_string(d)
     << "</text>\n";
  if (!inside) {
    os << "  <text x=\"" << px(-half + 8) << "\" y=\"" << px(-half + 38)
       << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#c0392b\">"
          "d not verified for this certificate</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace latcover
