#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"
#include "auxzeta/parallel.hpp"

namespace auxzeta {

// x-ray: the curves Re f = 0 and Im f = 0; their crossings are the zeros.

struct Window {
    double x0, x1, y0, y1;
};

struct Segment {
    double ax, ay, bx, by;
};

struct Xray {
    Window window{};
    int resolution = 0;
    std::vector<Segment> re_curves;
    std::vector<Segment> im_curves;
    std::vector<double> grid_re;  // (res+1)^2 row-major, index i + j*(res+1)
    std::vector<double> grid_im;
    long warnings = 0;  // evaluation failures rendered as gaps
};

namespace detail {

// marching squares on one scalar field; emits the zero-level segments of the
// cell (i,j) given its corner values.
inline void cell_segments(double x0, double y0, double dx, double dy, double v00, double v10,
                          double v11, double v01, std::vector<Segment>& out) {
    auto bad = [](double v) { return !std::isfinite(v); };
    if (bad(v00) || bad(v10) || bad(v11) || bad(v01)) return;
    int idx = 0;
    if (v00 > 0) idx |= 1;
    if (v10 > 0) idx |= 2;
    if (v11 > 0) idx |= 4;
    if (v01 > 0) idx |= 8;
    if (idx == 0 || idx == 15) return;
    auto lerp = [](double a, double b) { return a / (a - b); };
    // edge midcrossings: bottom(00-10) right(10-11) top(01-11) left(00-01)
    const double bx = x0 + dx * lerp(v00, v10), by = y0;
    const double rx = x0 + dx, ry = y0 + dy * lerp(v10, v11);
    const double tx = x0 + dx * lerp(v01, v11), ty = y0 + dy;
    const double lx = x0, ly = y0 + dy * lerp(v00, v01);
    auto add = [&](double ax, double ay, double cx, double cy) {
        out.push_back({ax, ay, cx, cy});
    };
    switch (idx) {
        case 1: case 14: add(bx, by, lx, ly); break;
        case 2: case 13: add(bx, by, rx, ry); break;
        case 3: case 12: add(lx, ly, rx, ry); break;
        case 4: case 11: add(rx, ry, tx, ty); break;
        case 6: case 9:  add(bx, by, tx, ty); break;
        case 7: case 8:  add(lx, ly, tx, ty); break;
        case 5: case 10: {
            // saddle: disambiguate with the center average
            const double c = 0.25 * (v00 + v10 + v11 + v01);
            const bool center_pos = c > 0;
            if ((idx == 5) == center_pos) {
                add(bx, by, rx, ry);
                add(lx, ly, tx, ty);
            } else {
                add(bx, by, lx, ly);
                add(rx, ry, tx, ty);
            }
            break;
        }
        default: break;
    }
}

}  // namespace detail

inline Xray compute_xray(const std::function<cplx(cplx)>& f, const Window& w, int resolution,
                         unsigned threads = 0) {
    if (resolution < 2 || resolution > 4000)
        throw regime_error("compute_xray: resolution must be in [2, 4000]");
    Xray x;
    x.window = w;
    x.resolution = resolution;
    const int n = resolution + 1;
    x.grid_re.assign((std::size_t)n * n, std::nan(""));
    x.grid_im.assign((std::size_t)n * n, std::nan(""));
    const double dx = (w.x1 - w.x0) / resolution;
    const double dy = (w.y1 - w.y0) / resolution;
    std::atomic<long> warnings{0};
    parallel_for((std::size_t)n, [&](std::size_t j) {
        for (int i = 0; i < n; ++i) {
            const cplx s(w.x0 + dx * i, w.y0 + dy * (double)j);
            try {
                const cplx v = f(s);
                x.grid_re[i + j * n] = v.real();
                x.grid_im[i + j * n] = v.imag();
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) ++warnings;
            } catch (const std::exception&) {
                ++warnings;
            }
        }
    }, threads);
    x.warnings = warnings;
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            const double cx = w.x0 + dx * i, cy = w.y0 + dy * j;
            detail::cell_segments(cx, cy, dx, dy, x.grid_re[i + j * n], x.grid_re[i + 1 + j * n],
                                  x.grid_re[i + 1 + (j + 1) * n], x.grid_re[i + (j + 1) * n],
                                  x.re_curves);
            detail::cell_segments(cx, cy, dx, dy, x.grid_im[i + j * n], x.grid_im[i + 1 + j * n],
                                  x.grid_im[i + 1 + (j + 1) * n], x.grid_im[i + (j + 1) * n],
                                  x.im_curves);
        }
    }
    return x;
}

namespace detail {
inline bool segments_intersect(const Segment& p, const Segment& q) {
    auto cross = [](double ox, double oy, double ax, double ay, double bx, double by) {
        return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
    };
    const double d1 = cross(p.ax, p.ay, p.bx, p.by, q.ax, q.ay);
    const double d2 = cross(p.ax, p.ay, p.bx, p.by, q.bx, q.by);
    const double d3 = cross(q.ax, q.ay, q.bx, q.by, p.ax, p.ay);
    const double d4 = cross(q.ax, q.ay, q.bx, q.by, p.bx, p.by);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}
}  // namespace detail

// Points where a Re-curve crosses an Im-curve, i.e. the visible zeros.
inline std::vector<std::pair<double, double>> xray_crossings(const Xray& x) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : x.re_curves) {
        for (const auto& m : x.im_curves) {
            if (detail::segments_intersect(r, m)) {
                pts.emplace_back(0.25 * (r.ax + r.bx + m.ax + m.bx),
                                 0.25 * (r.ay + r.by + m.ay + m.by));
            }
        }
    }
    return pts;
}

inline void write_xray_svg(const Xray& x, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw missing_input_error("write_xray_svg: cannot open " + path);
    const auto& w = x.window;
    auto ymap = [&](double y) { return w.y1 + w.y0 - y; };  // svg y grows downward
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << w.x0 << " " << w.y0 << " "
      << (w.x1 - w.x0) << " " << (w.y1 - w.y0) << "\">\n";
    f << "<rect x=\"" << w.x0 << "\" y=\"" << w.y0 << "\" width=\"" << (w.x1 - w.x0)
      << "\" height=\"" << (w.y1 - w.y0) << "\" fill=\"white\"/>\n";
    const double sw = (w.x1 - w.x0) / 900.0;
    char buf[256];
    f << "<g id=\"re-curves\" stroke=\"#205090\" stroke-width=\"" << sw << "\" fill=\"none\">\n";
    for (const auto& s : x.re_curves) {
        std::snprintf(buf, sizeof buf, "<line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\"/>\n",
                      s.ax, ymap(s.ay), s.bx, ymap(s.by));
        f << buf;
    }
    f << "</g>\n<g id=\"im-curves\" stroke=\"#b03030\" stroke-width=\"" << sw
      << "\" stroke-dasharray=\"" << 4 * sw << " " << 3 * sw << "\" fill=\"none\">\n";
    for (const auto& s : x.im_curves) {
        std::snprintf(buf, sizeof buf, "<line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\"/>\n",
                      s.ax, ymap(s.ay), s.bx, ymap(s.by));
        f << buf;
    }
    f << "</g>\n</svg>\n";
}

inline void write_xray_csv(const Xray& x, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw missing_input_error("write_xray_csv: cannot open " + path);
    f << "i,j,sigma,t,re_sign,im_sign\n";
    const int n = x.resolution + 1;
    const double dx = (x.window.x1 - x.window.x0) / x.resolution;
    const double dy = (x.window.y1 - x.window.y0) / x.resolution;
    auto sgn = [](double v) { return std::isfinite(v) ? (v > 0 ? 1 : (v < 0 ? -1 : 0)) : 0; };
    char buf[160];
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%d,%d,%.10g,%.10g,%d,%d\n", i, j,
                          x.window.x0 + dx * i, x.window.y0 + dy * j, sgn(x.grid_re[i + j * n]),
                          sgn(x.grid_im[i + j * n]));
            f << buf;
        }
    }
}

}  // namespace auxzeta
