#pragma once

// Document format, serialization and SVG rendering.  Coordinates travel as
// strings (decimal, "p/q" fractions, or the tokens inf / -inf) so that no
// exactness is lost; serialization emits canonical fraction strings and
// round-trips bit-exactly on canonical documents.

#include "persistdist/dimdist.hpp"
#include "persistdist/intersection.hpp"
#include "persistdist/interval.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace persistdist::io {

struct NamedModule {
    std::string name;
    IntervalModule module;
};

struct GridDocument {
    std::vector<std::size_t> shape;
    std::vector<Rational> origin;
    Rational spacing = 1;
    GridFunction function;
};

struct ModuleDocument {
    std::string format_version = "1";
    std::vector<NamedModule> modules;
    std::optional<GridDocument> grid;
};

// "p/q", decimal strings like "-2.5", or inf / -inf.
ExtendedScalar parse_scalar(const std::string& text);
Rational parse_rational(const std::string& text);  // finite values only
std::string format_scalar(const ExtendedScalar& v);

ModuleDocument parse_document(const std::string& text);
std::string serialize_document(const ModuleDocument& doc);
ModuleDocument load_file(const std::string& path);

struct RenderOptions {
    std::optional<std::array<Rational, 4>> frame;  // x0, y0, x1, y1
    double width = 640;
};

// Presentation-only: staircase regions as filled paths; coordinates at
// infinity are clipped to the frame and the clipped edges get arrowheads.
std::string render_svg(const std::vector<NamedModule>& modules,
                       const std::vector<IntersectionComponent>& components,
                       const RenderOptions& options);

}  // namespace persistdist::io
