#include "persistdist/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace persistdist::io {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where.empty() ? what : where + ": " + what);
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational decimal_to_rational(const std::string& text, const std::string& where) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    const auto dot = body.find('.');
    std::string int_part = dot == std::string::npos ? body : body.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) fail(where, "empty numeric literal");
    if (!int_part.empty() && !all_digits(int_part)) fail(where, "bad numeric literal '" + text + "'");
    if (!frac_part.empty() && !all_digits(frac_part)) fail(where, "bad numeric literal '" + text + "'");

    mpz_class num(int_part.empty() ? "0" : int_part);
    mpz_class den(1);
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

ExtendedScalar parse_scalar_at(const std::string& raw, const std::string& where) {
    std::string text = raw;
    text.erase(std::remove_if(text.begin(), text.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.empty()) fail(where, "empty coordinate");
    if (text == "inf" || text == "+inf") return ExtendedScalar::pos_inf();
    if (text == "-inf") return ExtendedScalar::neg_inf();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        std::string num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
        if (!all_digits(num_digits) || !all_digits(den))
            fail(where, "bad fraction '" + raw + "'");
        Rational q(mpz_class(num), mpz_class(den));
        if (q.get_den() == 0) fail(where, "zero denominator in '" + raw + "'");
        q.canonicalize();
        return ExtendedScalar(std::move(q));
    }
    return ExtendedScalar(decimal_to_rational(text, where));
}

ExtendedScalar scalar_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_string()) return parse_scalar_at(j.get<std::string>(), where);
    if (j.is_number_integer()) return ExtendedScalar(Rational(static_cast<long>(j.get<std::int64_t>())));
    fail(where, "coordinates must be strings or integers (floats lose exactness)");
}

Point point_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "a point is a two-element array [x, y]");
    return Point{scalar_from_json(j[0], where + "[0]"), scalar_from_json(j[1], where + "[1]")};
}

std::vector<Point> chain_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "a chain is a nonempty array of points");
    std::vector<Point> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(point_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

GridDocument grid_from_json(const ordered_json& j, const std::string& where) {
    GridDocument g;
    if (!j.is_object()) fail(where, "grid must be an object");
    if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].empty())
        fail(where + ".shape", "shape must be a nonempty array of positive integers");
    std::size_t cells = 1;
    for (const auto& e : j["shape"]) {
        if (!e.is_number_integer() || e.get<std::int64_t>() <= 0)
            fail(where + ".shape", "shape entries must be positive integers");
        g.shape.push_back(static_cast<std::size_t>(e.get<std::int64_t>()));
        cells *= g.shape.back();
    }
    if (j.contains("origin")) {
        for (std::size_t i = 0; i < j["origin"].size(); ++i) {
            ExtendedScalar v =
                scalar_from_json(j["origin"][i], where + ".origin[" + std::to_string(i) + "]");
            if (!v.is_finite()) fail(where + ".origin", "origin must be finite");
            g.origin.push_back(v.value());
        }
        if (g.origin.size() != g.shape.size())
            fail(where + ".origin", "origin length must match shape length");
    } else {
        g.origin.assign(g.shape.size(), Rational(0));
    }
    if (j.contains("spacing")) {
        ExtendedScalar v = scalar_from_json(j["spacing"], where + ".spacing");
        if (!v.is_finite() || v.value() <= 0) fail(where + ".spacing", "spacing must be finite and positive");
        g.spacing = v.value();
    }
    if (!j.contains("values") || !j["values"].is_array() || j["values"].size() != cells)
        fail(where + ".values", "values must be a flat array matching the shape (" +
                                    std::to_string(cells) + " entries)");
    g.function.shape = g.shape;
    g.function.values.reserve(cells);
    for (const auto& e : j["values"]) {
        if (!e.is_number_integer()) fail(where + ".values", "grid values must be integers");
        g.function.values.push_back(e.get<std::int64_t>());
    }
    return g;
}

ordered_json scalar_to_json(const ExtendedScalar& v) { return ordered_json(v.str()); }

ordered_json chain_to_json(const MonotoneChain& c) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : c.vertices) arr.push_back({scalar_to_json(p.x), scalar_to_json(p.y)});
    return arr;
}

// --- SVG helpers -------------------------------------------------------------

double clamp_for_render(const ExtendedScalar& v, double lo, double hi) {
    if (v.is_neg_inf()) return lo;
    if (v.is_pos_inf()) return hi;
    return v.value().get_d();
}

const char* kPalette[] = {"#4878a8", "#c85450", "#58985c", "#9868a8", "#c8883c", "#50a0a0"};

}  // namespace

ExtendedScalar parse_scalar(const std::string& text) { return parse_scalar_at(text, ""); }

Rational parse_rational(const std::string& text) {
    ExtendedScalar v = parse_scalar_at(text, "");
    if (!v.is_finite()) throw ParseError("expected a finite rational, got '" + text + "'");
    return v.value();
}

std::string format_scalar(const ExtendedScalar& v) { return v.str(); }

ModuleDocument parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) fail("", "document root must be an object");

    ModuleDocument doc;
    if (j.contains("format_version")) {
        if (!j["format_version"].is_string()) fail("format_version", "must be a string");
        doc.format_version = j["format_version"].get<std::string>();
        if (doc.format_version != "1")
            fail("format_version", "unsupported version '" + doc.format_version + "'");
    }
    if (j.contains("modules")) {
        if (!j["modules"].is_array()) fail("modules", "must be an array");
        for (std::size_t mi = 0; mi < j["modules"].size(); ++mi) {
            const std::string mwhere = "modules[" + std::to_string(mi) + "]";
            const auto& mj = j["modules"][mi];
            if (!mj.is_object()) fail(mwhere, "must be an object");
            NamedModule named;
            named.name = mj.contains("name") ? mj["name"].get<std::string>()
                                             : "module" + std::to_string(mi);
            if (!mj.contains("intervals") || !mj["intervals"].is_array())
                fail(mwhere + ".intervals", "must be an array");
            for (std::size_t ii = 0; ii < mj["intervals"].size(); ++ii) {
                const std::string iwhere = mwhere + ".intervals[" + std::to_string(ii) + "]";
                const auto& ij = mj["intervals"][ii];
                if (!ij.is_object() || !ij.contains("lower") || !ij.contains("upper"))
                    fail(iwhere, "an interval is an object with 'lower' and 'upper' chains");
                named.module.summands.push_back(
                    StaircaseInterval::validate(chain_from_json(ij["lower"], iwhere + ".lower"),
                                                chain_from_json(ij["upper"], iwhere + ".upper")));
            }
            doc.modules.push_back(std::move(named));
        }
    }
    if (j.contains("grid")) doc.grid = grid_from_json(j["grid"], "grid");
    return doc;
}

std::string serialize_document(const ModuleDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["modules"] = ordered_json::array();
    for (const NamedModule& named : doc.modules) {
        ordered_json mj;
        mj["name"] = named.name;
        mj["intervals"] = ordered_json::array();
        for (const StaircaseInterval& s : named.module.summands) {
            ordered_json ij;
            ij["lower"] = chain_to_json(s.lower());
            ij["upper"] = chain_to_json(s.upper());
            mj["intervals"].push_back(std::move(ij));
        }
        j["modules"].push_back(std::move(mj));
    }
    if (doc.grid) {
        ordered_json gj;
        gj["shape"] = doc.grid->shape;
        ordered_json origin = ordered_json::array();
        for (const Rational& v : doc.grid->origin) origin.push_back(ExtendedScalar(v).str());
        gj["origin"] = std::move(origin);
        gj["spacing"] = ExtendedScalar(doc.grid->spacing).str();
        gj["values"] = doc.grid->function.values;
        j["grid"] = std::move(gj);
    }
    return j.dump(2) + "\n";
}

ModuleDocument load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (ValidationError&) {
        throw;
    }
}

std::string render_svg(const std::vector<NamedModule>& modules,
                       const std::vector<IntersectionComponent>& components,
                       const RenderOptions& options) {
    // frame: explicit or the bounding box of all finite coordinates, padded
    double fx0 = 0, fy0 = 0, fx1 = 1, fy1 = 1;
    if (options.frame) {
        fx0 = (*options.frame)[0].get_d();
        fy0 = (*options.frame)[1].get_d();
        fx1 = (*options.frame)[2].get_d();
        fy1 = (*options.frame)[3].get_d();
    } else {
        bool any = false;
        double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
        for (const NamedModule& named : modules)
            for (const StaircaseInterval& s : named.module.summands)
                for (const MonotoneChain* c : {&s.lower(), &s.upper()})
                    for (const Point& p : c->vertices) {
                        if (!p.x.is_finite() || !p.y.is_finite()) continue;
                        const double x = p.x.value().get_d();
                        const double y = p.y.value().get_d();
                        if (!any) {
                            lo_x = hi_x = x;
                            lo_y = hi_y = y;
                            any = true;
                        }
                        lo_x = std::min(lo_x, x);
                        hi_x = std::max(hi_x, x);
                        lo_y = std::min(lo_y, y);
                        hi_y = std::max(hi_y, y);
                    }
        if (!any) {
            lo_x = lo_y = 0;
            hi_x = hi_y = 1;
        }
        const double pad = std::max({1.0, (hi_x - lo_x) * 0.1, (hi_y - lo_y) * 0.1});
        fx0 = lo_x - pad;
        fy0 = lo_y - pad;
        fx1 = hi_x + pad;
        fy1 = hi_y + pad;
    }
    const double scale = options.width / (fx1 - fx0);
    const double height = (fy1 - fy0) * scale;
    auto px = [&](double wx) { return (wx - fx0) * scale; };
    auto py = [&](double wy) { return height - (wy - fy0) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << options.width << " " << height << "\">\n";
    svg << "  <defs><marker id=\"clip-arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
           "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555\"/></marker></defs>\n";

    auto emit_interval = [&](const StaircaseInterval& s, const char* color, double opacity) {
        std::vector<std::pair<double, double>> poly;
        std::vector<bool> clipped;
        auto push = [&](const Point& p) {
            poly.emplace_back(clamp_for_render(p.x, fx0, fx1), clamp_for_render(p.y, fy0, fy1));
            clipped.push_back(p.x.is_infinite() || p.y.is_infinite());
        };
        for (const Point& p : s.lower().vertices) push(p);
        for (auto it = s.upper().vertices.rbegin(); it != s.upper().vertices.rend(); ++it) push(*it);
        svg << "  <path d=\"";
        for (std::size_t i = 0; i < poly.size(); ++i)
            svg << (i == 0 ? "M" : "L") << px(poly[i].first) << ' ' << py(poly[i].second) << ' ';
        svg << "Z\" fill=\"" << color << "\" fill-opacity=\"" << opacity << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            if (!clipped[i] && !clipped[i + 1]) continue;
            svg << "  <line x1=\"" << px(poly[i].first) << "\" y1=\"" << py(poly[i].second)
                << "\" x2=\"" << px(poly[i + 1].first) << "\" y2=\"" << py(poly[i + 1].second)
                << "\" stroke=\"#555\" stroke-dasharray=\"4 3\" marker-end=\"url(#clip-arrow)\"/>\n";
        }
    };

    std::size_t color_index = 0;
    for (const NamedModule& named : modules) {
        const char* color = kPalette[color_index++ % (sizeof(kPalette) / sizeof(kPalette[0]))];
        for (const StaircaseInterval& s : named.module.summands) emit_interval(s, color, 0.35);
    }
    for (const IntersectionComponent& q : components) emit_interval(q.region, "#303030", 0.55);

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace persistdist::io
