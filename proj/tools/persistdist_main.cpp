#include "persistdist/bottleneck.hpp"
#include "persistdist/dimdist.hpp"
#include "persistdist/generator.hpp"
#include "persistdist/interleaving.hpp"
#include "persistdist/io.hpp"
#include "persistdist/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>

namespace {

using namespace persistdist;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSizeLimit = 3;

const StaircaseInterval& single_summand(const io::ModuleDocument& doc, const std::string& path) {
    if (doc.modules.empty() || doc.modules.front().module.summands.empty())
        throw ParseError(path + ": no intervals found");
    const auto& module = doc.modules.front().module;
    if (module.summands.size() != 1)
        throw ParseError(path +
                         ": interleaving distance needs a single-interval module; "
                         "use `bottleneck` for interval decomposable modules");
    return module.summands.front();
}

const IntervalModule& first_module(const io::ModuleDocument& doc, const std::string& path) {
    if (doc.modules.empty()) throw ParseError(path + ": document contains no modules");
    return doc.modules.front().module;
}

int cmd_validate(const std::vector<std::string>& files, bool json_out) {
    ordered_json report = ordered_json::array();
    for (const std::string& path : files) {
        const io::ModuleDocument doc = io::load_file(path);
        std::size_t intervals = 0, vertices = 0;
        for (const auto& named : doc.modules)
            for (const auto& s : named.module.summands) {
                ++intervals;
                vertices += s.lower().size() + s.upper().size();
            }
        if (json_out) {
            report.push_back({{"file", path},
                              {"modules", doc.modules.size()},
                              {"intervals", intervals},
                              {"vertices", vertices},
                              {"grid", doc.grid.has_value()}});
        } else {
            std::cout << path << ": ok (" << doc.modules.size() << " modules, " << intervals
                      << " intervals, " << vertices << " chain vertices"
                      << (doc.grid ? ", grid" : "") << ")\n";
        }
    }
    if (json_out) std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_interleaving(const std::string& a, const std::string& b, bool json_out) {
    const auto da = io::load_file(a);
    const auto db = io::load_file(b);
    const ExtendedScalar d = interleaving_distance(single_summand(da, a), single_summand(db, b));
    if (json_out)
        std::cout << ordered_json{{"distance", d.str()}}.dump() << "\n";
    else
        std::cout << d.str() << "\n";
    return kExitOk;
}

int cmd_bottleneck(const std::string& a, const std::string& b, bool json_out) {
    const auto da = io::load_file(a);
    const auto db = io::load_file(b);
    const BottleneckResult res = bottleneck_with_matching(first_module(da, a), first_module(db, b));
    if (json_out) {
        ordered_json j;
        j["distance"] = res.distance.str();
        j["matching"] = ordered_json::array();
        for (const auto& [i, k] : res.matching) j["matching"].push_back({i, k});
        j["unmatched_left"] = res.unmatched_left;
        j["unmatched_right"] = res.unmatched_right;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << res.distance.str() << "\n";
        for (const auto& [i, k] : res.matching) std::cout << "match " << i << " " << k << "\n";
        for (std::size_t i : res.unmatched_left) std::cout << "unmatched_left " << i << "\n";
        for (std::size_t j : res.unmatched_right) std::cout << "unmatched_right " << j << "\n";
    }
    return kExitOk;
}

GridFunction grid_argument(const io::ModuleDocument& doc, const std::string& path,
                           const std::string& grid_spec) {
    if (doc.grid) return doc.grid->function;
    if (grid_spec.empty())
        throw ParseError(path + ": no grid block; pass --grid x0,y0,spacing,nx[,ny] to sample "
                                "the module's dimension function");
    CLI::results_t parts;
    std::stringstream ss(grid_spec);
    std::string item;
    std::vector<std::string> tokens;
    while (std::getline(ss, item, ',')) tokens.push_back(item);
    if (tokens.size() != 4 && tokens.size() != 5)
        throw ParseError("--grid expects x0,y0,spacing,nx[,ny]");
    const Rational x0 = io::parse_rational(tokens[0]);
    const Rational y0 = io::parse_rational(tokens[1]);
    const Rational spacing = io::parse_rational(tokens[2]);
    const long nx = std::stol(tokens[3]);
    const long ny = tokens.size() == 5 ? std::stol(tokens[4]) : nx;
    if (spacing <= 0 || nx <= 0 || ny <= 0) throw ParseError("--grid values must be positive");
    return dimension_function(first_module(doc, path),
                              {static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)},
                              Point{ExtendedScalar(x0), ExtendedScalar(y0)}, spacing);
}

int cmd_dimdist(const std::string& a, const std::string& b, const std::string& grid_spec,
                bool json_out) {
    const auto da = io::load_file(a);
    const auto db = io::load_file(b);
    const GridFunction f = grid_argument(da, a, grid_spec);
    const GridFunction g = grid_argument(db, b, grid_spec);
    const DimensionDistances d = dimension_distance(f, g);
    auto show = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string("inf");
    };
    if (json_out) {
        ordered_json j{{"d_minus", show(d.d_minus)},
                       {"d_plus", show(d.d_plus)},
                       {"d_zero", show(d.d_zero)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "d_minus " << show(d.d_minus) << "\nd_plus " << show(d.d_plus) << "\nd_zero "
                  << show(d.d_zero) << "\n";
    }
    return kExitOk;
}

int cmd_oracle_check(const std::string& a, const std::string& b, const std::string& delta_text,
                     std::uint64_t seed, std::size_t trials, std::size_t max_components,
                     bool json_out) {
    OracleLimits limits;
    limits.max_components = max_components;

    if (!a.empty()) {
        const auto da = io::load_file(a);
        const auto db = io::load_file(b);
        const StaircaseInterval& m = single_summand(da, a);
        const StaircaseInterval& n = single_summand(db, b);
        if (!delta_text.empty()) {
            const Rational delta = io::parse_rational(delta_text);
            const bool ok = oracle_is_interleaved(m, n, delta, limits);
            if (json_out)
                std::cout << ordered_json{{"delta", delta.get_str()}, {"interleaved", ok}}.dump()
                          << "\n";
            else
                std::cout << (ok ? "interleaved" : "not-interleaved") << "\n";
            return kExitOk;
        }
        const ExtendedScalar fast = interleaving_distance(m, n);
        const ExtendedScalar slow = oracle_distance(m, n, limits);
        const bool agree = fast == slow;
        if (json_out)
            std::cout << ordered_json{{"algorithm", fast.str()},
                                      {"oracle", slow.str()},
                                      {"agree", agree}}
                             .dump()
                      << "\n";
        else
            std::cout << "algorithm " << fast.str() << "\noracle " << slow.str() << "\n"
                      << (agree ? "agree" : "MISMATCH") << "\n";
        return agree ? kExitOk : kExitFailure;
    }

    std::mt19937_64 rng(seed);
    StaircaseGenOptions gen;
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const StaircaseInterval m = random_staircase(rng, gen);
        const StaircaseInterval n = random_staircase(rng, gen);
        const ExtendedScalar fast = interleaving_distance(m, n);
        const ExtendedScalar slow = oracle_distance(m, n, limits);
        if (fast != slow) {
            ++mismatches;
            std::cerr << "mismatch on trial " << t << ": algorithm " << fast.str() << ", oracle "
                      << slow.str() << "\n";
        }
    }
    if (json_out)
        std::cout << ordered_json{{"trials", trials}, {"mismatches", mismatches}}.dump() << "\n";
    else
        std::cout << trials << " trials, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kExitOk : kExitFailure;
}

int cmd_render(const std::string& a, const std::string& b, const std::string& frame_spec) {
    io::RenderOptions options;
    if (!frame_spec.empty()) {
        std::stringstream ss(frame_spec);
        std::string item;
        std::vector<Rational> vals;
        while (std::getline(ss, item, ',')) vals.push_back(io::parse_rational(item));
        if (vals.size() != 4) throw ParseError("--frame expects x0,y0,x1,y1");
        options.frame = {vals[0], vals[1], vals[2], vals[3]};
    }
    std::vector<io::NamedModule> modules;
    const auto da = io::load_file(a);
    for (const auto& named : da.modules) modules.push_back(named);
    std::vector<IntersectionComponent> components;
    if (!b.empty()) {
        const auto db = io::load_file(b);
        for (const auto& named : db.modules) modules.push_back(named);
        if (!da.modules.empty() && !db.modules.empty() &&
            da.modules.front().module.summands.size() == 1 &&
            db.modules.front().module.summands.size() == 1) {
            components = intersect_components(da.modules.front().module.summands.front(),
                                              db.modules.front().module.summands.front());
        }
    }
    std::cout << io::render_svg(modules, components, options);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distances between 2-parameter interval persistence modules"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    auto* validate = app.add_subcommand("validate", "parse and validate module documents");
    std::vector<std::string> validate_files;
    validate->add_option("files", validate_files)->required()->expected(-1);

    auto* inter = app.add_subcommand("interleaving", "interleaving distance of two interval modules");
    std::string inter_a, inter_b;
    inter->add_option("A", inter_a)->required();
    inter->add_option("B", inter_b)->required();

    auto* bottle = app.add_subcommand("bottleneck", "bottleneck distance of two modules");
    std::string bottle_a, bottle_b;
    bottle->add_option("A", bottle_a)->required();
    bottle->add_option("B", bottle_b)->required();

    auto* dim = app.add_subcommand("dimdist", "dimension distance of two grid functions");
    std::string dim_a, dim_b, dim_grid;
    dim->add_option("F", dim_a)->required();
    dim->add_option("G", dim_b)->required();
    dim->add_option("--grid", dim_grid, "x0,y0,spacing,nx[,ny]: sample modules on this grid");

    auto* oracle = app.add_subcommand("oracle-check", "cross-check the algorithm against the oracle");
    std::string oracle_a, oracle_b, oracle_delta;
    std::uint64_t seed = 1;
    std::size_t trials = 25, max_components = 12;
    oracle->add_option("A", oracle_a);
    oracle->add_option("B", oracle_b);
    oracle->add_option("--delta", oracle_delta, "probe a single interleaving value");
    oracle->add_option("--seed", seed, "random trial seed");
    oracle->add_option("--trials", trials, "number of random trials (no files given)");
    oracle->add_option("--max-components", max_components, "oracle component bound");

    auto* render = app.add_subcommand("render", "render staircase intervals to SVG on stdout");
    std::string render_a, render_b, render_frame;
    render->add_option("A", render_a)->required();
    render->add_option("B", render_b);
    render->add_option("--frame", render_frame, "clip frame x0,y0,x1,y1");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(validate_files, json_out);
        if (*inter) return cmd_interleaving(inter_a, inter_b, json_out);
        if (*bottle) return cmd_bottleneck(bottle_a, bottle_b, json_out);
        if (*dim) return cmd_dimdist(dim_a, dim_b, dim_grid, json_out);
        if (*oracle) {
            if (oracle_a.empty() != oracle_b.empty())
                throw ParseError("oracle-check needs either two files or none");
            return cmd_oracle_check(oracle_a, oracle_b, oracle_delta, seed, trials, max_components,
                                    json_out);
        }
        if (*render) return cmd_render(render_a, render_b, render_frame);
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const TooManyComponents& e) {
        std::cerr << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
