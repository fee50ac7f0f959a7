#include "eulerint/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

namespace eulerint {

namespace {

struct Tri {
    double x[3], y[3], v[3];
};

double tri_eval(const Tri& t, double px, double py, bool& inside) {
    double det = (t.x[1] - t.x[0]) * (t.y[2] - t.y[0]) - (t.y[1] - t.y[0]) * (t.x[2] - t.x[0]);
    if (det == 0) {
        inside = false;
        return 0;
    }
    double l1 = ((px - t.x[0]) * (t.y[2] - t.y[0]) - (py - t.y[0]) * (t.x[2] - t.x[0])) / det;
    double l2 = ((t.x[1] - t.x[0]) * (py - t.y[0]) - (t.y[1] - t.y[0]) * (px - t.x[0])) / det;
    double l0 = 1 - l1 - l2;
    const double eps = -1e-12;
    inside = l0 >= eps && l1 >= eps && l2 >= eps;
    return l0 * t.v[0] + l1 * t.v[1] + l2 * t.v[2];
}

}  // namespace

void write_field_pgm(const std::string& path, const SensorNetwork& net,
                     const RatVec& node_values, int width) {
    const SimplicialComplex& K = *net.K;
    const double x0 = rat_double(net.x0), x1 = rat_double(net.x1);
    const double y0 = rat_double(net.y0), y1 = rat_double(net.y1);
    const int height = std::max(1, static_cast<int>(width * (y1 - y0) / (x1 - x0)));

    std::vector<Tri> tris;
    double vmin = 0, vmax = 0;
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) != 2) continue;
        Tri t;
        const auto& verts = K.cell_verts(c);
        for (int i = 0; i < 3; ++i) {
            t.x[i] = rat_double(K.vertex(verts[i])[0]);
            t.y[i] = rat_double(K.vertex(verts[i])[1]);
            t.v[i] = rat_double(node_values[verts[i]]);
            vmin = std::min(vmin, t.v[i]);
            vmax = std::max(vmax, t.v[i]);
        }
        tris.push_back(t);
    }
    if (vmax == vmin) vmax = vmin + 1;

    std::vector<int> pix(static_cast<std::size_t>(width) * height, 255);
    for (const Tri& t : tris) {
        double bx0 = std::min({t.x[0], t.x[1], t.x[2]});
        double bx1 = std::max({t.x[0], t.x[1], t.x[2]});
        double by0 = std::min({t.y[0], t.y[1], t.y[2]});
        double by1 = std::max({t.y[0], t.y[1], t.y[2]});
        int px0 = std::max(0, static_cast<int>((bx0 - x0) / (x1 - x0) * width) - 1);
        int px1 = std::min(width - 1, static_cast<int>((bx1 - x0) / (x1 - x0) * width) + 1);
        int py0 = std::max(0, static_cast<int>((by0 - y0) / (y1 - y0) * height) - 1);
        int py1 = std::min(height - 1, static_cast<int>((by1 - y0) / (y1 - y0) * height) + 1);
        for (int py = py0; py <= py1; ++py) {
            for (int px = px0; px <= px1; ++px) {
                double wx = x0 + (px + 0.5) / width * (x1 - x0);
                double wy = y0 + (py + 0.5) / height * (y1 - y0);
                bool inside = false;
                double v = tri_eval(t, wx, wy, inside);
                if (!inside) continue;
                // White = zero, darker = higher |value|.
                int g = 255 - static_cast<int>(std::lround(255.0 * (v - vmin) / (vmax - vmin)));
                g = std::clamp(g, 0, 255);
                // Raster rows top-down.
                pix[static_cast<std::size_t>(height - 1 - py) * width + px] = g;
            }
        }
    }

    std::ofstream out(path);
    out << "P2\n" << width << " " << height << "\n255\n";
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            out << pix[static_cast<std::size_t>(row) * width + col];
            out << (col + 1 == width ? '\n' : ' ');
        }
    }
}

void write_network_svg(const std::string& path, const SensorNetwork& net,
                       const RatVec& node_values, int width) {
    const SimplicialComplex& K = *net.K;
    const double x0 = rat_double(net.x0), x1 = rat_double(net.x1);
    const double y0 = rat_double(net.y0), y1 = rat_double(net.y1);
    const double margin = 10;
    const double scale = (width - 2 * margin) / (x1 - x0);
    const int height = static_cast<int>((y1 - y0) * scale + 2 * margin);
    auto sx = [&](double x) { return margin + (x - x0) * scale; };
    auto sy = [&](double y) { return height - margin - (y - y0) * scale; };

    double vmin = 0, vmax = 0;
    for (const Rat& v : node_values) {
        vmin = std::min(vmin, rat_double(v));
        vmax = std::max(vmax, rat_double(v));
    }
    if (vmax == vmin) vmax = vmin + 1;

    std::ofstream out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) != 1) continue;
        const auto& e = K.cell_verts(c);
        out << "<line x1=\"" << sx(rat_double(K.vertex(e[0])[0])) << "\" y1=\""
            << sy(rat_double(K.vertex(e[0])[1])) << "\" x2=\""
            << sx(rat_double(K.vertex(e[1])[0])) << "\" y2=\""
            << sy(rat_double(K.vertex(e[1])[1]))
            << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    }
    for (int v = 0; v < K.vertex_count(); ++v) {
        double t = (rat_double(node_values[v]) - vmin) / (vmax - vmin);
        int r = static_cast<int>(255 * t);
        int b = static_cast<int>(255 * (1 - t));
        int g = static_cast<int>(255 * (1 - std::abs(2 * t - 1)));
        const char* stroke = net.hole[v] ? "black" : "none";
        out << "<circle cx=\"" << sx(rat_double(K.vertex(v)[0])) << "\" cy=\""
            << sy(rat_double(K.vertex(v)[1])) << "\" r=\"3\" fill=\"rgb(" << r << "," << g << ","
            << b << ")\" stroke=\"" << stroke << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace eulerint
