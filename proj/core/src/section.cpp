#include "movcone/section.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "movcone/errors.hpp"
#include "movcone/linalg.hpp"

namespace movcone {

const char* to_string(ConeSelect which) {
    switch (which) {
        case ConeSelect::ne: return "ne";
        case ConeSelect::mov: return "mov";
        case ConeSelect::sme: return "sme";
    }
    return "?";
}

namespace {

Cone selected_cone(const VarietyData& v, ConeSelect which) {
    switch (which) {
        case ConeSelect::ne: return mori_cone(v);
        case ConeSelect::mov: return moving_cone(v);
        case ConeSelect::sme: return sme_cone(v);
    }
    throw DomainError("unknown cone selector");
}

// Interior point of the dual cone: every facet normal is a dual generator,
// and +/- pairs from a flat cone cancel, leaving a functional strictly
// positive on all generators.
QVec auto_level(const Cone& c) {
    QVec level = QVec::Zero(c.ambient_dim());
    for (const QVec& n : c.facet_normals()) level += n;
    return level;
}

void require_rho3(const VarietyData& v) {
    if (v.rho != 3)
        throw DomainError("cross-section output needs rho = 3 (dataset '" + v.name + "' has rho = " +
                          std::to_string(v.rho) + "); pick a rho = 3 dataset such as p1xp1xp1");
}

std::string csv_section(const Cone& cone) {
    const std::vector<QVec> vertices = cone.cross_section(auto_level(cone));
    std::string out;
    for (const QVec& vert : vertices) {
        for (Eigen::Index i = 0; i < vert.size(); ++i) {
            if (i) out += ",";
            out += rat_to_string(vert(i));
        }
        out += "\n";
    }
    return out;
}

Rat det3(const QVec& a, const QVec& b, const QVec& c) {
    return a(0) * (b(1) * c(2) - b(2) * c(1)) - a(1) * (b(0) * c(2) - b(2) * c(0)) +
           a(2) * (b(0) * c(1) - b(1) * c(0));
}

struct PlaneFrame {
    QVec level;
    QVec u1, u2;
    QVec ref;  // base point in the affine slice
    Rat scale;

    std::pair<double, double> project(const QVec& v) const {
        const QVec p = v - ref;
        const Rat a = det3(p, u2, level) / scale;
        const Rat b = det3(u1, p, level) / scale;
        return {a.convert_to<double>(), b.convert_to<double>()};
    }
};

PlaneFrame make_frame(const QVec& level, const QVec& ref) {
    QMat row(1, 3);
    row.row(0) = level.transpose();
    std::vector<QVec> plane = kernel_basis(row);
    PlaneFrame frame{level, plane[0], plane[1], ref, 0};
    if (det3(frame.u1, frame.u2, level) < 0) std::swap(frame.u1, frame.u2);
    frame.scale = det3(frame.u1, frame.u2, level);
    return frame;
}

std::string fmt(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", x);
    return buffer;
}

std::string svg_section(const VarietyData& v, ConeSelect which) {
    const Cone ne = mori_cone(v);
    const QVec level = auto_level(ne);
    const std::vector<QVec> ne_verts = ne.cross_section(level);
    const Cone selected = selected_cone(v, which);
    std::vector<QVec> sel_verts;
    if (!selected.is_zero()) sel_verts = selected.cross_section(level);

    const PlaneFrame frame =
        make_frame(level, ne_verts.empty() ? QVec(QVec::Zero(3)) : ne_verts.front());

    // Walls of the divisorial contractions, clipped to the NE polygon.
    struct Chord {
        std::pair<double, double> a, b;
        std::string label;
    };
    std::vector<Chord> chords;
    std::size_t exc_index = 0;
    for (const QVec& e : exceptional_divisors(v)) {
        ++exc_index;
        const QVec wall = v.pairing.transpose() * e;
        std::vector<QVec> hits;
        const std::size_t edges =
            ne_verts.size() >= 3 ? ne_verts.size() : (ne_verts.size() == 2 ? 1 : 0);
        for (std::size_t i = 0; i < edges; ++i) {
            const QVec& p = ne_verts[i];
            const QVec& q = ne_verts[(i + 1) % ne_verts.size()];
            const Rat wp = dot(wall, p);
            const Rat wq = dot(wall, q);
            if (wp == wq) {
                if (wp == 0) {
                    hits.push_back(p);
                    hits.push_back(q);
                }
                continue;
            }
            const Rat t = wp / (wp - wq);
            if (t < 0 || t > 1) continue;
            hits.push_back(p + t * (q - p));
        }
        std::sort(hits.begin(), hits.end(), lex_less);
        hits.erase(std::unique(hits.begin(), hits.end(), vec_eq), hits.end());
        if (hits.size() >= 2)
            chords.push_back({frame.project(hits.front()), frame.project(hits.back()),
                              "E" + std::to_string(exc_index) + "\xE2\x8A\xA5"});
    }

    std::vector<std::pair<double, double>> ne2, sel2;
    for (const QVec& p : ne_verts) ne2.push_back(frame.project(p));
    for (const QVec& p : sel_verts) sel2.push_back(frame.project(p));

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& [x, y] : ne2) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 48, size = 512;
    const double factor = (size - 2 * margin) / span;
    auto to_view = [&](std::pair<double, double> p) {
        return std::pair<double, double>{margin + (p.first - min_x) * factor,
                                         size - margin - (p.second - min_y) * factor};
    };

    auto polygon_points = [&](const std::vector<std::pair<double, double>>& pts) {
        std::string s;
        for (const auto& p : pts) {
            const auto [x, y] = to_view(p);
            s += fmt(x) + "," + fmt(y) + " ";
        }
        if (!s.empty()) s.pop_back();
        return s;
    };
    auto centroid_view = [&](const std::vector<std::pair<double, double>>& pts) {
        double cx = 0, cy = 0;
        for (const auto& p : pts) {
            const auto [x, y] = to_view(p);
            cx += x;
            cy += y;
        }
        const double n = pts.empty() ? 1.0 : static_cast<double>(pts.size());
        return std::pair<double, double>{cx / n, cy / n};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
           "viewBox=\"0 0 512 512\">\n";
    svg << "  <rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
    svg << "  <title>" << v.name << ": cross-section of the cone of curves</title>\n";
    if (sel2.size() >= 3)
        svg << "  <polygon points=\"" << polygon_points(sel2)
            << "\" fill=\"#8bb8e8\" fill-opacity=\"0.55\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    if (ne2.size() >= 3)
        svg << "  <polygon points=\"" << polygon_points(ne2)
            << "\" fill=\"none\" stroke=\"#202020\" stroke-width=\"2\"/>\n";
    for (const auto& p : ne2) {
        const auto [x, y] = to_view(p);
        svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"#202020\"/>\n";
    }
    for (const Chord& chord : chords) {
        const auto [x1, y1] = to_view(chord.a);
        const auto [x2, y2] = to_view(chord.b);
        svg << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2)
            << "\" stroke=\"#b03030\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        svg << "  <text x=\"" << fmt((x1 + x2) / 2 + 6) << "\" y=\"" << fmt((y1 + y2) / 2 - 6)
            << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#b03030\">" << chord.label
            << "</text>\n";
    }
    if (ne2.size() >= 3) {
        const auto [cx, cy] = centroid_view(ne2);
        svg << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy + (sel2.size() >= 3 ? 28.0 : 0.0))
            << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#202020\" "
               "text-anchor=\"middle\">NE</text>\n";
    }
    if (sel2.size() >= 3 && which != ConeSelect::ne) {
        const auto [cx, cy] = centroid_view(sel2);
        svg << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy)
            << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#1f5fa8\" "
               "text-anchor=\"middle\">"
            << (which == ConeSelect::mov ? "Mov" : "SME") << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_cross_section(const VarietyData& v, ConeSelect which, SectionFormat format) {
    require_rho3(v);
    if (format == SectionFormat::csv) return csv_section(selected_cone(v, which));
    return svg_section(v, which);
}

std::string cross_section_json(const VarietyData& v, ConeSelect which) {
    require_rho3(v);
    const Cone cone = selected_cone(v, which);
    const std::vector<QVec> vertices = cone.cross_section(auto_level(cone));
    nlohmann::ordered_json doc;
    doc["dataset"] = v.name;
    doc["cone"] = to_string(which);
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const QVec& vert : vertices) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < vert.size(); ++i) row.push_back(rat_to_string(vert(i)));
        doc["vertices"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

void emit_cross_section(const VarietyData& v, ConeSelect which, SectionFormat format,
                        const std::filesystem::path& out_path) {
    const std::string content = render_cross_section(v, which, format);
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path.string() + "'");
    out << content;
}

}  // namespace movcone
