#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vecinv/calculus.hpp"
#include "vecinv/coords.hpp"
#include "vecinv/errors.hpp"
#include "vecinv/inverse.hpp"
#include "vecinv/parser.hpp"
#include "vecinv/verify.hpp"

namespace vecinv::cli {

namespace {

using nlohmann::ordered_json;

struct Invocation {
    std::string command;
    std::string coords = "cartesian";
    std::string coords_file;
    std::vector<std::string> components;
    std::string weights;
    std::string base;
    std::string c0 = "0";
    std::string gauge_scalar;
    std::string gauge_vector;
    bool verify = false;
    std::size_t samples = 100;
    std::uint64_t seed = 42;
    bool unchecked = false;
    std::string format = "text";
};

const std::set<std::string> kValueOptions{"--coords", "--coords-file", "--weights", "--base",   "--c0",
                                          "--gauge-scalar", "--gauge-vector", "--samples", "--seed", "--format"};
const std::set<std::string> kCommands{"curl", "div", "grad", "inv-curl", "inv-div", "inv-grad", "verify"};

constexpr const char* kDescription =
    "Symbolic forward and inverse vector operators in orthogonal curvilinear coordinates.\n"
    "Vector components are positional, in e1 e2 e3 order (e.g. x y z, rho phi z, r theta phi).";

// Component expressions may start with '-' ("-z - y*z^2/2"), so every token
// that is not a known long option or its value is moved behind "--".
std::vector<std::string> normalize_arguments(const std::vector<std::string>& args) {
    std::vector<std::string> options;
    std::vector<std::string> positionals;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--") {
            positionals.insert(positionals.end(), args.begin() + static_cast<long>(i) + 1, args.end());
            break;
        }
        if (a.rfind("--", 0) == 0) {
            const auto eq = a.find('=');
            const std::string key = a.substr(0, eq);
            if (kValueOptions.count(key) && eq == std::string::npos && i + 1 < args.size()) {
                options.push_back(key + "=" + args[++i]);
            } else {
                options.push_back(a);
            }
        } else if (a == "-h") {
            options.push_back(a);
        } else {
            positionals.push_back(a);
        }
    }
    std::vector<std::string> out;
    // The subcommand name must precede its options.
    auto command = std::find_if(positionals.begin(), positionals.end(),
                                [](const std::string& p) { return kCommands.count(p) > 0; });
    if (command != positionals.end() && command == positionals.begin()) {
        out.push_back(*command);
        positionals.erase(command);
    }
    out.insert(out.end(), options.begin(), options.end());
    if (!positionals.empty()) {
        out.emplace_back("--");
        out.insert(out.end(), positionals.begin(), positionals.end());
    }
    return out;
}

void add_common_options(CLI::App& cmd, Invocation& inv) {
    cmd.add_option("--coords", inv.coords, "Builtin coordinate system")
        ->check(CLI::IsMember({"cartesian", "cylindrical", "spherical"}));
    cmd.add_option("--coords-file", inv.coords_file, "Custom coordinate system file (names, h1, h2, h3, base, box)");
    cmd.add_option("--format", inv.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd.add_option("components", inv.components, "Component expressions (e1 e2 e3) or a scalar expression");
}

void add_verification_options(CLI::App& cmd, Invocation& inv) {
    cmd.add_flag("--verify", inv.verify, "Attach a symbolic + sampled round-trip report");
    cmd.add_option("--samples", inv.samples, "Number of sample points")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", inv.seed, "Sampling RNG seed");
}

Rational parse_rational(const std::string& text, const std::string& what) {
    std::optional<Rational> value;
    try {
        value = canonicalize(parse(text)).constant_value();
    } catch (const Error&) {
    }
    if (!value) throw SourceError(0, what + " as a rational number", "'" + text + "'");
    return *value;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(item);
    return out;
}

std::array<Rational, 3> parse_triple(const std::string& text, const std::string& what) {
    auto parts = split_commas(text);
    if (parts.size() != 3) throw SourceError(0, "three comma-separated " + what, "'" + text + "'");
    return {parse_rational(parts[0], what), parse_rational(parts[1], what), parse_rational(parts[2], what)};
}

CoordinateSystem select_system(const Invocation& inv) {
    if (!inv.coords_file.empty()) return load_coordinate_file(inv.coords_file);
    return builtin(inv.coords);
}

std::size_t arity(const std::string& command) {
    return (command == "grad" || command == "inv-div") ? 1 : 3;
}

std::vector<Expression> parse_components(const std::vector<std::string>& texts) {
    std::vector<Expression> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse(t));
    return out;
}

VectorField vector_input(const std::vector<Expression>& c, const CoordinateSystem& system) {
    return make_vector_field({c.at(0), c.at(1), c.at(2)}, system);
}

std::vector<Expression> as_vector(const VectorField& f) {
    return {f.components[0], f.components[1], f.components[2]};
}

ordered_json report_json(const VerificationReport& r) {
    ordered_json j;
    j["kind"] = std::string(to_string(r.kind));
    j["symbolic_equal"] = r.symbolic_equal;
    ordered_json residual = ordered_json::array();
    for (const auto& e : r.residual) residual.push_back(render(e));
    j["residual"] = residual;
    j["sample_count"] = r.sample_count;
    j["resampled"] = r.resampled;
    j["max_abs_error"] = r.max_abs_error;
    j["max_rel_error"] = r.max_rel_error;
    j["numeric_agreement"] = r.numeric_agreement;
    j["rng_seed"] = r.rng_seed;
    ordered_json box = ordered_json::array();
    for (const auto& iv : r.sampling_box) box.push_back({iv.lo, iv.hi});
    j["sampling_box"] = box;
    return j;
}

struct Outcome {
    std::vector<Expression> result;
    std::optional<VerificationReport> report;
    std::optional<std::pair<std::string, std::vector<Expression>>> diagnostic;  // unchecked residuals
};

ReportOptions report_options(const Invocation& inv) {
    ReportOptions options;
    options.samples = inv.samples;
    options.seed = inv.seed;
    options.unchecked = inv.unchecked;
    return options;
}

Outcome execute(const Invocation& inv, const CoordinateSystem& system, const std::vector<Expression>& input) {
    Outcome outcome;
    const ReportOptions options = report_options(inv);
    const std::string& cmd = inv.command;
    if (cmd == "curl") {
        outcome.result = as_vector(curl(vector_input(input, system)));
    } else if (cmd == "div") {
        outcome.result = {divergence(vector_input(input, system))};
    } else if (cmd == "grad") {
        outcome.result = as_vector(gradient(make_scalar_field(input.at(0), system)));
    } else if (cmd == "inv-curl") {
        const VectorField b = vector_input(input, system);
        VectorField a = b;
        if (inv.unchecked) {
            auto unchecked = inverse_curl_unchecked(b);
            a = unchecked.potential;
            outcome.diagnostic = {"divergence_residual", {unchecked.divergence_residual}};
        } else {
            a = inverse_curl(b);
        }
        if (!inv.gauge_scalar.empty()) a = gauge_shift_curl(a, make_scalar_field(parse(inv.gauge_scalar), system));
        outcome.result = as_vector(a);
        if (inv.verify) outcome.report = compare(as_vector(curl(a)), input, system, options);
        if (outcome.report) outcome.report->kind = RoundTripKind::InverseCurl;
    } else if (cmd == "inv-div") {
        const ScalarField f = make_scalar_field(input.at(0), system);
        DivergenceWeights weights;
        if (!inv.weights.empty()) {
            auto k = parse_triple(inv.weights, "weights");
            weights = DivergenceWeights(k[0], k[1], k[2]);
        }
        VectorField a = inverse_divergence(f, weights);
        if (!inv.gauge_vector.empty()) {
            auto parts = split_commas(inv.gauge_vector);
            if (parts.size() != 3) throw SourceError(0, "three comma-separated gauge components", inv.gauge_vector);
            a = gauge_shift_div(a, vector_input(parse_components(parts), system));
        }
        outcome.result = as_vector(a);
        if (inv.verify) {
            outcome.report = compare({divergence(a)}, input, system, options);
            outcome.report->kind = RoundTripKind::InverseDivergence;
        }
    } else if (cmd == "inv-grad") {
        const VectorField a = vector_input(input, system);
        BasePoint base = BasePoint::defaults_for(system);
        if (!inv.base.empty()) {
            auto p = parse_triple(inv.base, "base coordinates");
            base.a = p[0];
            base.b = p[1];
            base.c = p[2];
        }
        base.c0 = parse_rational(inv.c0, "c0");
        auto solve = [&]() -> ScalarField {
            if (!inv.unchecked) return inverse_gradient(a, base);
            auto unchecked = inverse_gradient_unchecked(a, base);
            outcome.diagnostic = {"curl_residual",
                                  {unchecked.curl_residual[0], unchecked.curl_residual[1],
                                   unchecked.curl_residual[2]}};
            return unchecked.potential;
        };
        const ScalarField phi = solve();
        outcome.result = {phi.value};
        if (inv.verify) {
            outcome.report = compare(as_vector(gradient(phi)), input, system, options);
            outcome.report->kind = RoundTripKind::InverseGradient;
        }
    }
    return outcome;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Source:
        case ErrorKind::Validation:
        case ErrorKind::UnknownSystem:
        case ErrorKind::UnboundVariable: return kExitUsage;
        case ErrorKind::NotSolenoidal:
        case ErrorKind::NotConservative:
        case ErrorKind::BasePointSingular: return kExitPrecondition;
        case ErrorKind::NotIntegrable:
        case ErrorKind::Unsupported:
        case ErrorKind::Domain: return kExitNotIntegrable;
        case ErrorKind::ConstructionFailed: return kExitConstructionFailed;
    }
    return kExitUsage;
}

void print_text(std::ostream& out, const Outcome& outcome) {
    if (outcome.result.size() == 1) {
        out << "phi: " << render(outcome.result.front()) << '\n';
    } else {
        for (std::size_t i = 0; i < outcome.result.size(); ++i) {
            out << 'e' << (i + 1) << ": " << render(outcome.result[i]) << '\n';
        }
    }
    if (outcome.diagnostic) {
        out << outcome.diagnostic->first << ':';
        for (const auto& e : outcome.diagnostic->second) out << ' ' << render(e) << ';';
        out << '\n';
    }
    if (outcome.report) {
        const auto& r = *outcome.report;
        out << "verification: symbolic_equal=" << (r.symbolic_equal ? "true" : "false")
            << " samples=" << r.sample_count << " max_abs_error=" << r.max_abs_error
            << " max_rel_error=" << r.max_rel_error
            << " numeric_agreement=" << (r.numeric_agreement ? "true" : "false") << " seed=" << r.rng_seed << '\n';
    }
}

ordered_json system_json(const CoordinateSystem& system) {
    ordered_json j;
    j["name"] = system.label();
    j["names"] = system.names();
    ordered_json h = ordered_json::array();
    for (const auto& e : system.scale_factors()) h.push_back(render(e));
    j["scale_factors"] = h;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    CLI::App app{kDescription, "vecinv"};
    app.require_subcommand(1);

    std::string verify_kind;
    std::map<std::string, CLI::App*> commands;
    commands["curl"] = app.add_subcommand("curl", "Curl of a vector field: curl E1 E2 E3");
    commands["div"] = app.add_subcommand("div", "Divergence of a vector field: div E1 E2 E3");
    commands["grad"] = app.add_subcommand("grad", "Gradient of a scalar field: grad F");
    commands["inv-curl"] = app.add_subcommand("inv-curl", "Vector potential of a solenoidal field: inv-curl B1 B2 B3");
    commands["inv-div"] = app.add_subcommand("inv-div", "Vector potential with given divergence: inv-div F");
    commands["inv-grad"] = app.add_subcommand("inv-grad", "Scalar potential of a conservative field: inv-grad A1 A2 A3");
    commands["verify"] = app.add_subcommand("verify", "Round-trip report: verify {inv-curl|inv-div|inv-grad} COMPONENTS...");

    for (auto& [name, cmd] : commands) {
        cmd->callback([&inv, name = name] { inv.command = name; });
        if (name == "verify") {
            cmd->add_option("kind", verify_kind, "Inverse operator to verify")
                ->required()
                ->check(CLI::IsMember({"inv-curl", "inv-div", "inv-grad"}));
        }
        add_common_options(*cmd, inv);
        if (name == "inv-curl" || name == "inv-div" || name == "inv-grad" || name == "verify") {
            add_verification_options(*cmd, inv);
        }
        if (name == "inv-curl" || name == "inv-grad" || name == "verify") {
            cmd->add_flag("--unchecked", inv.unchecked,
                          "Skip the solenoidal/conservative gate and attach the residual");
        }
        if (name == "inv-curl") cmd->add_option("--gauge-scalar", inv.gauge_scalar, "Add the gradient of EXPR");
        if (name == "inv-div" || name == "verify") {
            cmd->add_option("--weights", inv.weights, "k1,k2,k3 with k1+k2+k3 = 1 (default 1/3,1/3,1/3)");
        }
        if (name == "inv-div") {
            cmd->add_option("--gauge-vector", inv.gauge_vector, "Add the curl of E1,E2,E3");
        }
        if (name == "inv-grad" || name == "verify") {
            cmd->add_option("--base", inv.base, "Base point a,b,c (default: system base point)");
            cmd->add_option("--c0", inv.c0, "Integration constant");
        }
    }

    std::vector<std::string> normalized = normalize_arguments(args);
    std::reverse(normalized.begin(), normalized.end());
    try {
        app.parse(normalized);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool json = inv.format == "json";
    ordered_json doc;
    doc["command"] = inv.command == "verify" ? "verify " + verify_kind : inv.command;
    doc["coords"] = nullptr;
    doc["input"] = inv.components;
    doc["result"] = nullptr;
    doc["verification"] = nullptr;
    doc["residual"] = nullptr;
    doc["error"] = nullptr;

    try {
        if (!inv.coords_file.empty() && commands.at(inv.command)->count("--coords") > 0) {
            throw ValidationError("--coords and --coords-file are mutually exclusive");
        }
        const CoordinateSystem system = select_system(inv);
        doc["coords"] = system_json(system);

        Outcome outcome;
        if (inv.command == "verify") {
            const std::size_t expected = verify_kind == "inv-div" ? 1 : 3;
            if (inv.components.size() != expected) {
                throw SourceError(0, std::to_string(expected) + " component expressions",
                                  std::to_string(inv.components.size()));
            }
            const auto input = parse_components(inv.components);
            ReportOptions options = report_options(inv);
            VerificationReport report;
            if (verify_kind == "inv-div") {
                if (!inv.weights.empty()) {
                    auto k = parse_triple(inv.weights, "weights");
                    options.weights = DivergenceWeights(k[0], k[1], k[2]);
                }
                report = roundtrip_report(RoundTripKind::InverseDivergence, make_scalar_field(input[0], system),
                                          options);
            } else {
                BasePoint base = BasePoint::defaults_for(system);
                if (!inv.base.empty()) {
                    auto p = parse_triple(inv.base, "base coordinates");
                    base.a = p[0];
                    base.b = p[1];
                    base.c = p[2];
                }
                base.c0 = parse_rational(inv.c0, "c0");
                options.base = base;
                report = roundtrip_report(
                    verify_kind == "inv-curl" ? RoundTripKind::InverseCurl : RoundTripKind::InverseGradient,
                    vector_input(input, system), options);
            }
            outcome.result = report.result;
            outcome.report = report;
        } else {
            if (inv.components.size() != arity(inv.command)) {
                throw SourceError(0, std::to_string(arity(inv.command)) + " component expressions",
                                  std::to_string(inv.components.size()));
            }
            outcome = execute(inv, system, parse_components(inv.components));
        }

        if (json) {
            ordered_json result = ordered_json::array();
            for (const auto& e : outcome.result) result.push_back(render(e));
            doc["result"] = result;
            if (outcome.report) doc["verification"] = report_json(*outcome.report);
            if (outcome.diagnostic) {
                ordered_json residual;
                residual["kind"] = outcome.diagnostic->first;
                ordered_json values = ordered_json::array();
                for (const auto& e : outcome.diagnostic->second) values.push_back(render(e));
                residual["values"] = values;
                doc["residual"] = residual;
            }
            out << doc.dump(2) << '\n';
        } else {
            print_text(out, outcome);
        }
        return kExitOk;
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        if (json) {
            ordered_json error;
            error["kind"] = std::string(to_string(e.kind()));
            error["message"] = e.what();
            error["residual"] = e.residual();
            if (const auto* source = dynamic_cast<const SourceError*>(&e)) error["offset"] = source->offset();
            doc["error"] = error;
            out << doc.dump(2) << '\n';
        } else {
            err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
            if (!e.residual().empty()) {
                err << "residual:";
                for (const auto& r : e.residual()) err << ' ' << r << ';';
                err << '\n';
            }
        }
        return code;
    }
}

}  // namespace vecinv::cli
