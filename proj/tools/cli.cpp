#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrowhead/bijection.hpp"
#include "arrowhead/curves.hpp"
#include "arrowhead/enumerate.hpp"
#include "arrowhead/errors.hpp"
#include "arrowhead/lsystem.hpp"
#include "arrowhead/paths.hpp"
#include "arrowhead/render.hpp"

namespace arrowhead::cli {

namespace {

// Thrown for argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Carries a failed check out of a subcommand.
struct ValidationFailure {
    VerificationReport report;
};

struct Config {
    bool json = false;
    long long cap = kDefaultTileCap;

    std::string kind;
    std::string direction;
    std::string method;
    std::string digits;
    std::string input;
    std::string output;
    int order = 0;
    int level = 0;
    unsigned workers = 1;
    int split_depth = 3;
    bool count_only = false;
    bool deep = false;
    bool overlay = false;
    bool check = false;
    double scale = 40.0;
};

void emit_failure(const VerificationReport& report, const Config& config, std::ostream& out, std::ostream& err) {
    if (config.json) {
        out << report.to_json() << "\n";
    } else {
        err << "validation failed: " << report.check << " at index " << report.index << ": " << report.message << "\n";
    }
}

Digits require_path(PathKind kind, const std::string& text, int order) {
    auto digits = parse_digits(text);
    if (auto report = diagnose(kind, digits, order); !report.ok) throw ValidationFailure{std::move(report)};
    return digits;
}

std::string path_record(PathKind kind, int order, const Digits& digits) {
    nlohmann::ordered_json j;
    j["n"] = order;
    j["kind"] = std::string(1, kind_letter(kind));
    j["digits"] = to_string(digits);
    return j.dump();
}

int cmd_enumerate(const Config& c, std::ostream& out, std::ostream& err) {
    const auto kind = parse_kind(c.kind);
    if (kind == PathKind::H && c.order >= 9 && !c.deep) {
        throw UsageError("H enumeration for order 9 and above runs for a long time; pass --deep");
    }
    EnumerationOptions options;
    options.workers = c.workers;
    options.split_depth = c.split_depth;
    if (c.deep) {
        options.progress = [&err](std::size_t done, std::size_t total) {
            err << "progress " << done << "/" << total << " tasks\n" << std::flush;
        };
    }

    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw UsageError("cannot open " + c.output + " for writing");
    }
    PathSink sink;
    if (!c.count_only) {
        if (file.is_open()) {
            sink = [&](const Digits& d) { file << path_record(kind, c.order, d) << "\n"; };
        } else if (c.json) {
            sink = [&](const Digits& d) { out << path_record(kind, c.order, d) << "\n"; };
        } else {
            sink = [&](const Digits& d) { out << to_string(d) << "\n"; };
        }
    }

    const auto report = enumerate(kind, c.order, options, sink);
    if (c.json) {
        out << report.to_json() << "\n";
    } else if (c.count_only || file.is_open()) {
        out << report.count << "\n";
    } else {
        err << "count " << report.count << "\n";
    }
    if (!report.verified) err << "note: no published count for this order; result is unverified\n";
    return kExitOk;
}

int cmd_transform(const Config& c, std::ostream& out) {
    Digits result;
    PathKind produced;
    if (c.direction == "w2s") {
        result = w_to_s(require_path(PathKind::W, c.digits, c.order));
        produced = PathKind::S;
    } else {
        result = s_to_w(require_path(PathKind::S, c.digits, c.order));
        produced = PathKind::W;
    }
    out << (c.json ? path_record(produced, c.order, result) : to_string(result)) << "\n";
    return kExitOk;
}

int cmd_trivial_w(const Config& c, std::ostream& out) {
    const auto w = trivial_w(c.order);
    out << (c.json ? w.to_json() : w.text()) << "\n";
    return kExitOk;
}

int cmd_curve(const Config& c, std::ostream& out) {
    const auto method = parse_method(c.method);
    const auto curve = method == RewriteMethod::EdgeRewriting
                           ? er_expand(require_path(PathKind::S, c.digits, c.order), c.order, c.level, c.cap)
                           : nr_expand(require_path(PathKind::W, c.digits, c.order), c.order, c.level, c.cap);
    std::string text;
    if (c.json) {
        nlohmann::ordered_json j;
        j["n"] = c.order;
        j["method"] = method_name(method);
        j["level"] = c.level;
        j["digits"] = to_string(curve.digits);
        text = j.dump();
    } else {
        text = to_string(curve.digits);
    }
    if (c.output.empty()) {
        out << text << "\n";
    } else {
        std::ofstream file(c.output);
        if (!file) throw UsageError("cannot open " + c.output + " for writing");
        file << text << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const CurveString curve{c.order, parse_method(c.method), c.level, parse_digits(c.digits)};
    auto report = curve.method == RewriteMethod::EdgeRewriting ? verify_er(curve, c.cap) : verify_nr(curve, c.cap);
    if (!report.ok) throw ValidationFailure{std::move(report)};
    out << (c.json ? report.to_json() : std::string("ok")) << "\n";
    return kExitOk;
}

int cmd_lsystem(const Config& c, std::ostream& out) {
    const auto er = er_rules(require_path(PathKind::W, c.digits, c.order));
    const auto rules = parse_method(c.method) == RewriteMethod::EdgeRewriting ? er : nr_rules(er);
    if (c.json) {
        nlohmann::ordered_json j;
        j["axiom"] = rules.axiom;
        j["angle"] = rules.turn_degrees;
        for (const auto& [variable, body] : rules.productions) j["productions"][std::string(1, variable)] = body;
        out << j.dump() << "\n";
    } else {
        out << rules.to_text();
    }
    return kExitOk;
}

// First non-empty line of a digit-string file; JSONL path records are
// accepted as well.
std::string read_curve_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    std::string line;
    while (std::getline(file, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.front() == '{') {
            try {
                return nlohmann::json::parse(line).at("digits").get<std::string>();
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("malformed record in ") + path + ": " + e.what());
            }
        }
        return line;
    }
    return {};
}

int cmd_render(const Config& c, std::ostream& out) {
    RenderSpec spec;
    spec.scale = c.scale;
    spec.tile_cap = c.cap;

    std::string svg;
    if (c.input.empty()) {
        svg = render_gasket(gasket_tiles(c.order, c.level, c.cap), spec);
    } else {
        const auto digits = parse_digits(read_curve_file(c.input));
        const auto tiles = checked_pow(triangular_number(c.order), c.level);
        RewriteMethod method;
        if (!c.method.empty()) {
            method = parse_method(c.method);
        } else if (static_cast<long long>(digits.size()) == tiles) {
            method = RewriteMethod::EdgeRewriting;
        } else if (static_cast<long long>(digits.size()) == tiles - 1) {
            method = RewriteMethod::NodeRewriting;
        } else {
            throw UsageError("curve length matches neither ER nor NR at this order and level");
        }
        const CurveString curve{c.order, method, c.level, digits};
        auto report = method == RewriteMethod::EdgeRewriting ? verify_er(curve, c.cap) : verify_nr(curve, c.cap);
        if (!report.ok) throw ValidationFailure{std::move(report)};
        const auto polyline = curve_polyline(curve);
        svg = c.overlay ? render_gasket(gasket_tiles(c.order, c.level, c.cap), spec, polyline)
                        : render_curve(polyline, spec);
    }
    if (c.output == "-") {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(c.output);
    if (!file) throw UsageError("cannot open " + c.output + " for writing");
    file << svg;
    return kExitOk;
}

int cmd_dimension(const Config& c, std::ostream& out) {
    const double d = hausdorff_dimension(c.order);
    if (c.json) {
        nlohmann::ordered_json j;
        j["n"] = c.order;
        j["dimension"] = d;
        out << j.dump() << "\n";
    } else {
        out << std::setprecision(16) << d << "\n";
    }
    return kExitOk;
}

void print_table(std::ostream& out, const char* title, auto&& cell) {
    out << title << "\n  b:";
    for (int b = 0; b < 6; ++b) out << std::setw(5) << b;
    out << "\n";
    for (int a = 0; a < 6; ++a) {
        out << "a=" << a << " ";
        for (int b = 0; b < 6; ++b) out << std::setw(5) << cell(Direction(a), Direction(b));
        out << "\n";
    }
}

int cmd_tables(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.check) {
        const bool transform_ok = transform_table_consistent();
        const bool symbols_ok = symbol_table_consistent();
        if (c.json) {
            nlohmann::ordered_json j;
            j["ok"] = transform_ok && symbols_ok;
            j["transform_table"] = transform_ok;
            j["symbol_table"] = symbols_ok;
            out << j.dump() << "\n";
        } else {
            out << "transform table " << (transform_ok ? "ok" : "INCONSISTENT") << "\n";
            out << "symbol table " << (symbols_ok ? "ok" : "INCONSISTENT") << "\n";
        }
        if (!(transform_ok && symbols_ok)) {
            err << "table self-check failed\n";
            return kExitValidation;
        }
        return kExitOk;
    }
    print_table(out, "W/S transformation table", [](Direction a, Direction b) {
        const auto v = transform_cell(a, b);
        return v ? std::to_string(v->code()) : std::string("#");
    });
    print_table(out, "W pair to L-system symbols", [](Direction a, Direction b) {
        const auto v = symbol_group(a, b);
        return v ? std::string(*v) : std::string("#");
    });
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Generator paths and recursive curves of the generalized Sierpinski arrowhead family"};
    app.require_subcommand(1);
    app.add_flag("--json", c.json, "Newline-delimited JSON output");
    app.add_option("--cap", c.cap, "Largest tile count any curve or gasket may reach")
        ->check(CLI::PositiveNumber);

    const CLI::Range order_range(2, 1 << 20);
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order,-n", c.order, "Order n of the generator pattern")->required()->check(order_range);
    };
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("--level,-k", c.level, "Approximation level")->required()->check(CLI::NonNegativeNumber);
    };
    const auto methods = CLI::IsMember({"er", "nr"});

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate or count H, W or S paths");
    enumerate_cmd->add_option("--kind", c.kind, "h, w or s")->required()->check(CLI::IsMember({"h", "w", "s"}));
    enumerate_cmd->add_option("--order,-n", c.order, "Order n")
        ->required()
        ->check(CLI::Range(2, kMaxEnumerationOrder));
    enumerate_cmd->add_flag("--count-only", c.count_only, "Count without materializing paths");
    enumerate_cmd->add_flag("--deep", c.deep, "Allow long H runs and report progress");
    enumerate_cmd->add_option("--out", c.output, "Write JSONL path records to this file");
    enumerate_cmd->add_option("--workers", c.workers, "Worker threads, 0 = one per core");
    enumerate_cmd->add_option("--split-depth", c.split_depth, "Prefix depth of the parallel tasks")
        ->check(CLI::Range(0, 16));

    auto* transform_cmd = app.add_subcommand("transform", "Convert between W and S direction strings");
    transform_cmd->add_option("--direction", c.direction, "w2s or s2w")
        ->required()
        ->check(CLI::IsMember({"w2s", "s2w"}));
    transform_cmd->add_option("--path", c.digits, "Direction digits")->required();
    add_order(transform_cmd);

    auto* trivial_cmd = app.add_subcommand("trivial-w", "Print the constructive W-path");
    add_order(trivial_cmd);

    auto* curve_cmd = app.add_subcommand("curve", "Expand a generator to a level-k approximation");
    curve_cmd->add_option("--method", c.method, "er (S generator) or nr (W generator)")->required()->check(methods);
    add_order(curve_cmd);
    add_level(curve_cmd);
    curve_cmd->add_option("--generator", c.digits, "Generator digits")->required();
    curve_cmd->add_option("--out", c.output, "Write the curve digits to this file");

    auto* verify_cmd = app.add_subcommand("verify", "Check a level-k curve string");
    verify_cmd->add_option("--method", c.method, "er or nr")->required()->check(methods);
    add_order(verify_cmd);
    add_level(verify_cmd);
    verify_cmd->add_option("--path", c.digits, "Curve digits")->required();

    auto* lsystem_cmd = app.add_subcommand("lsystem", "Emit L-system rules for a W generator");
    lsystem_cmd->add_option("--generator", c.digits, "W-path digits")->required();
    add_order(lsystem_cmd);
    lsystem_cmd->add_option("--method", c.method, "er or nr")->required()->check(methods);

    auto* render_cmd = app.add_subcommand("render", "Write an SVG of a curve and/or the gasket");
    render_cmd->add_option("--input", c.input, "Curve digit file; omit to draw the gasket alone");
    add_order(render_cmd);
    add_level(render_cmd);
    render_cmd->add_flag("--overlay", c.overlay, "Draw the curve over the dark tiles");
    render_cmd->add_option("--method", c.method, "er or nr; inferred from the curve length if omitted")
        ->check(methods);
    render_cmd->add_option("--scale", c.scale, "Pixels per unit")->check(CLI::PositiveNumber);
    render_cmd->add_option("--out", c.output, "SVG output file, - for standard output")->required();

    auto* dimension_cmd = app.add_subcommand("dimension", "Hausdorff dimension log_n(T_n)");
    add_order(dimension_cmd);

    auto* tables_cmd = app.add_subcommand("tables", "Print or self-check the transformation tables");
    tables_cmd->add_flag("--check", c.check, "Verify table consistency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        const int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate_cmd->parsed()) return cmd_enumerate(c, out, err);
        if (transform_cmd->parsed()) return cmd_transform(c, out);
        if (trivial_cmd->parsed()) return cmd_trivial_w(c, out);
        if (curve_cmd->parsed()) return cmd_curve(c, out);
        if (verify_cmd->parsed()) return cmd_verify(c, out);
        if (lsystem_cmd->parsed()) return cmd_lsystem(c, out);
        if (render_cmd->parsed()) return cmd_render(c, out);
        if (dimension_cmd->parsed()) return cmd_dimension(c, out);
        if (tables_cmd->parsed()) return cmd_tables(c, out, err);
    } catch (const ValidationFailure& failure) {
        emit_failure(failure.report, c, out, err);
        return kExitValidation;
    } catch (const BlockedPair& e) {
        emit_failure({false, "blocked_pair", e.index(), e.what()}, c, out, err);
        return kExitValidation;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace arrowhead::cli
