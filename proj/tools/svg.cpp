#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace trimap::svg {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d4a6c8",
};

constexpr double kWidth = 640;
constexpr double kMargin = 24;

std::string num(double v)
{
    if (std::abs(v) < 5e-7)
        v = 0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Box {
    double lo_x = std::numeric_limits<double>::max();
    double lo_y = std::numeric_limits<double>::max();
    double hi_x = std::numeric_limits<double>::lowest();
    double hi_y = std::numeric_limits<double>::lowest();

    explicit Box(const std::vector<Point>& pts)
    {
        for (const auto& p : pts) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
    }

    bool contains(const Point& p) const
    {
        constexpr double eps = 1e-9;
        return p.x >= lo_x - eps && p.x <= hi_x + eps && p.y >= lo_y - eps && p.y <= hi_y + eps;
    }
};

class Canvas {
public:
    explicit Canvas(const Box& frame)
        : scale_((kWidth - 2 * kMargin) / std::max(frame.hi_x - frame.lo_x, 1e-9)),
          origin_x_(frame.lo_x),
          top_y_(frame.hi_y),
          height_((frame.hi_y - frame.lo_y) * scale_ + 2 * kMargin)
    {
    }

    std::string coords(const Point& p) const
    {
        return num(kMargin + (p.x - origin_x_) * scale_) + "," + num(kMargin + (top_y_ - p.y) * scale_);
    }

    std::string points(const std::vector<Vec3Q>& vs) const
    {
        std::string s;
        for (const auto& v : vs) {
            if (!s.empty())
                s += ' ';
            s += coords(project(v));
        }
        return s;
    }

    void add(std::string element) { body_ << "  " << element << '\n'; }

    std::string finish(const std::string& title) const
    {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth)
           << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height_)
           << "\">\n"
           << "  <title>" << title << "</title>\n"
           << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    double scale_ = 1;
    double origin_x_ = 0;
    double top_y_ = 0;
    double height_ = 0;
    std::ostringstream body_;
};

std::vector<Point> projected(const std::vector<Vec3Q>& vs)
{
    std::vector<Point> out;
    for (const auto& v : vs)
        out.push_back(project(v));
    return out;
}

std::vector<Vec3Q> domain_vertices()
{
    return {vertex_b(), vertex_v2(), vertex_v3()};
}

std::string outline(const Canvas& c, const std::vector<Vec3Q>& vs, const char* stroke, double width)
{
    return "<path d=\"M " + c.points(vs) + " Z\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\""
        + num(width) + "\"/>";
}

long floor_long(const Rational& r)
{
    return r.floor().numerator().get_si();
}

Vec3Q centroid(const std::array<Vec3Q, 3>& t)
{
    return (t[0] + t[1] + t[2]) * Rational(1, 3);
}

void draw_cells(Canvas& c, const MarkovPartition& mp, const char* opacity)
{
    for (const auto& cell : mp.cells()) {
        const auto i = cell.index;
        c.add("<polygon id=\"cell-" + std::to_string(i) + "\" points=\""
              + c.points({cell.vertices.begin(), cell.vertices.end()}) + "\" fill=\""
              + kPalette[i % kPalette.size()] + "\" fill-opacity=\"" + opacity
              + "\" stroke=\"#333333\" stroke-width=\"1.000000\"/>");
    }
}

std::string title_for(const Atm& a)
{
    return kind_str(a.kind) + " matrix " + a.matrix.str();
}

}  // namespace

Point project(const Vec3Q& p)
{
    const Vec3Q d = p - vertex_b();
    const double d0 = d[0].to_double(), d1 = d[1].to_double(), d2 = d[2].to_double();
    return {(d0 - d1) / std::sqrt(2.0), (d0 + d1 - 2 * d2) / std::sqrt(6.0)};
}

std::string render_partition(const MarkovPartition& mp)
{
    Canvas c(Box(projected(domain_vertices())));
    draw_cells(c, mp, "0.850000");
    for (const auto& cell : mp.cells()) {
        const std::string xy = c.coords(project(centroid(cell.vertices)));
        const auto comma = xy.find(',');
        c.add("<text x=\"" + xy.substr(0, comma) + "\" y=\"" + xy.substr(comma + 1)
              + "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
                "dominant-baseline=\"middle\">"
              + std::to_string(cell.index) + "</text>");
    }
    c.add(outline(c, domain_vertices(), "#000000", 2));
    return c.finish(title_for(mp.atm()) + " partition of D into " + std::to_string(mp.size()) + " cells");
}

std::string render_image(const Atm& a)
{
    const std::vector<Vec3Q> ap = {unit(0), unit(1), unit(2)};
    const std::vector<Vec3Q> image = {a.matrix.column(0), a.matrix.column(1), a.matrix.column(2)};

    std::vector<Vec3Q> frame = ap;
    frame.insert(frame.end(), image.begin(), image.end());
    const Box box(projected(frame));
    Canvas c(box);

    long x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    for (const auto& v : frame) {
        const long x = floor_long(v[0]), y = floor_long(v[1]);
        x_lo = std::min(x_lo, x - 1);
        x_hi = std::max(x_hi, x + 1);
        y_lo = std::min(y_lo, y - 1);
        y_hi = std::max(y_hi, y + 1);
    }
    // Chambers are clipped to the frame's bounding box by dropping any that stick out.
    std::string tiling;
    for (const auto& ch : chambers_around_lattice(x_lo, x_hi, y_lo, y_hi)) {
        if (!std::all_of(ch.vertices.begin(), ch.vertices.end(),
                         [&](const Vec3Q& v) { return box.contains(project(v)); }))
            continue;
        tiling += " M " + c.points({ch.vertices.begin(), ch.vertices.end()}) + " Z";
    }
    if (!tiling.empty())
        c.add("<path d=\"" + tiling.substr(1) + "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"0.500000\"/>");

    c.add("<polygon id=\"image\" points=\"" + c.points(image)
          + "\" fill=\"#4e79a7\" fill-opacity=\"0.450000\" stroke=\"#1f3b5a\" stroke-width=\"1.500000\"/>");
    c.add(outline(c, ap, "#000000", 2));
    c.add(outline(c, domain_vertices(), "#e15759", 1.5));
    return c.finish(title_for(a) + " image of A_p");
}

std::string render_orbit(const MarkovPartition* mp, const std::vector<CanonicalShape>& path)
{
    Canvas c(Box(projected(domain_vertices())));
    if (mp)
        draw_cells(c, *mp, "0.300000");
    c.add(outline(c, domain_vertices(), "#000000", 2));
    if (!path.empty()) {
        std::vector<Vec3Q> pts;
        for (const auto& p : path)
            pts.push_back(p.v());
        c.add("<polyline points=\"" + c.points(pts)
              + "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.000000\"/>");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string xy = c.coords(project(pts[i]));
            const auto comma = xy.find(',');
            c.add("<circle cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) + "\" r=\""
                  + (i == 0 ? "5.000000" : "3.000000") + "\" fill=\"" + (i == 0 ? "#e15759" : "#222222")
                  + "\"/>");
        }
    }
    std::string title = "orbit of " + (path.empty() ? std::string("nothing") : path.front().str());
    if (mp)
        title = title_for(mp->atm()) + " " + title;
    return c.finish(title);
}

}  // namespace trimap::svg
