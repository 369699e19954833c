#include "windiso/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace windiso {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json point_to_json(const Point& p) {
    return json::array({p.x.to_string(), p.y.to_string()});
}

}  // namespace

std::string curve_to_json(const ClosedCurve& curve) {
    json doc;
    doc["version"] = kDocumentVersion;
    json verts = json::array();
    for (const Point& p : curve.vertices()) verts.push_back(point_to_json(p));
    doc["vertices"] = std::move(verts);
    return doc.dump(2) + "\n";
}

ClosedCurve curve_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("version") || doc["version"].get<int>() != kDocumentVersion)
        throw std::invalid_argument("curve document: missing or unsupported version");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw std::invalid_argument("curve document: missing vertices array");
    std::vector<Point> pts;
    for (const json& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("curve document: vertex must be [x, y]");
        pts.push_back(Point{Rational::parse(v[0].get<std::string>()),
                            Rational::parse(v[1].get<std::string>())});
    }
    return ClosedCurve(std::move(pts));
}

std::string report_to_json(const InequalityReport& report) {
    json doc;
    doc["version"] = kDocumentVersion;
    doc["tool_version"] = kToolVersion;
    doc["p"] = report.params.p;
    doc["q"] = report.params.q;
    doc["lhs"] = fmt17(report.lhs);
    doc["rhs"] = fmt17(report.rhs);
    doc["ratio"] = fmt17(report.ratio);
    doc["telescoping_sum"] = fmt17(report.telescoping_sum);
    doc["pass"] = report.pass;

    const ReductionCertificate& cert = report.certificate;
    json jcert;
    jcert["initial_pvar"] = fmt17(cert.initial_pvar);
    jcert["step_count"] = cert.steps.size();
    double max_area = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    json steps = json::array();
    for (const RemovalStep& s : cert.steps) {
        double area = s.area.to_double();
        max_area = std::max(max_area, area);
        min_margin = std::min(min_margin, s.lemma_bound - area);
        json js;
        js["removed_index"] = s.removed_index;
        js["points_before"] = s.points_before;
        js["area"] = s.area.to_string();
        js["local_pvar"] = fmt17(s.local_pvar);
        js["bound"] = fmt17(s.lemma_bound);
        js["margin"] = fmt17(s.lemma_bound - area);
        steps.push_back(std::move(js));
    }
    jcert["max_step_area"] = fmt17(max_area);
    jcert["min_bound_margin"] = fmt17(cert.steps.empty() ? 0.0 : min_margin);
    jcert["steps"] = std::move(steps);
    doc["certificate"] = std::move(jcert);
    return doc.dump(2) + "\n";
}

std::string field_to_json(const WindingField& field) {
    json doc;
    doc["version"] = kDocumentVersion;
    doc["bbox"] = json::array({field.bbox.xmin.to_string(), field.bbox.ymin.to_string(),
                               field.bbox.xmax.to_string(), field.bbox.ymax.to_string()});
    json cells = json::array();
    for (const WindingCell& c : field.cells) {
        json jc;
        json poly = json::array();
        for (const Point& p : c.polygon) poly.push_back(point_to_json(p));
        jc["polygon"] = std::move(poly);
        jc["winding"] = c.winding;
        jc["area"] = c.area.to_string();
        cells.push_back(std::move(jc));
    }
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

SweepConfig sweep_config_from_json(const std::string& text) {
    json doc = json::parse(text);
    SweepConfig cfg;
    if (doc.contains("families")) {
        for (const json& jf : doc["families"]) {
            FamilySpec spec;
            auto fam = family_from_name(jf.at("family").get<std::string>());
            if (!fam) throw std::invalid_argument("sweep config: unknown family name");
            spec.family = *fam;
            spec.n = jf.value("n", 4);
            spec.seed = jf.value("seed", 0ull);
            if (jf.contains("scale")) spec.scale = Rational::parse(jf["scale"].get<std::string>());
            spec.step = jf.value("step", 0);
            cfg.families.push_back(std::move(spec));
        }
    }
    if (doc.contains("p_grid")) cfg.p_grid = doc["p_grid"].get<std::vector<double>>();
    cfg.q_count = doc.value("q_count", 4);
    cfg.guard = doc.value("guard", 0.05);
    return cfg;
}

std::string sweep_config_to_json(const SweepConfig& config) {
    json doc;
    json fams = json::array();
    for (const FamilySpec& spec : config.families) {
        json jf;
        jf["family"] = family_name(spec.family);
        jf["n"] = spec.n;
        jf["seed"] = spec.seed;
        jf["scale"] = spec.scale.to_string();
        jf["step"] = spec.step;
        fams.push_back(std::move(jf));
    }
    doc["families"] = std::move(fams);
    doc["p_grid"] = config.p_grid;
    doc["q_count"] = config.q_count;
    doc["guard"] = config.guard;
    return doc.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "family,n,seed,p,q,pvar,lhs,rhs,ratio,steps,pass\n";
    for (const SweepRow& row : rows) {
        const InequalityReport& r = row.report;
        out << family_name(row.spec.family) << ',' << row.spec.n << ',' << row.spec.seed << ','
            << fmt17(r.params.p) << ',' << fmt17(r.params.q) << ','
            << fmt17(r.certificate.initial_pvar) << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs)
            << ',' << fmt17(r.ratio) << ',' << r.certificate.steps.size() << ','
            << (r.pass ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<std::uint8_t> render_heatmap(const ClosedCurve& curve, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("render_heatmap: bad resolution");
    BBox box = curve.bounding_box();
    Rational wx = box.xmax - box.xmin;
    Rational wy = box.ymax - box.ymin;

    std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<std::size_t>(width) * height * 3);

    for (int row = 0; row < height; ++row) {
        // Pixel centers; y runs top to bottom.
        Rational fy(2 * row + 1, 2L * height);
        Rational y = box.ymax - wy * fy;
        for (int col = 0; col < width; ++col) {
            Rational fx(2 * col + 1, 2L * width);
            Point p{box.xmin + wx * fx, y};
            std::uint8_t r = 255, g = 255, b = 255;
            if (auto w = try_winding_at(curve, p)) {
                if (*w != 0) {
                    int mag = std::min(std::abs(*w), 5);
                    std::uint8_t c = static_cast<std::uint8_t>(255 - 51 * mag);
                    if (*w > 0) {
                        r = c; g = c; b = 255;
                    } else {
                        r = 255; g = c; b = c;
                    }
                }
            } else {
                r = g = b = 0;
            }
            out.push_back(r);
            out.push_back(g);
            out.push_back(b);
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= data[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace windiso
