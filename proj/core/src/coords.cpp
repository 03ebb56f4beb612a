#include "vecinv/coords.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vecinv/errors.hpp"
#include "vecinv/parser.hpp"

namespace vecinv {

bool CoordinateSystem::is_coordinate(std::string_view name) const noexcept {
    return std::find(data_->names.begin(), data_->names.end(), name) != data_->names.end();
}

bool operator==(const CoordinateSystem& lhs, const CoordinateSystem& rhs) {
    if (lhs.data_ == rhs.data_) return true;
    return lhs.names() == rhs.names() && lhs.data_->canonical_h == rhs.data_->canonical_h;
}

namespace {

Point point_of(const std::array<std::string, 3>& names, const std::array<double, 3>& values) {
    Point p;
    for (std::size_t i = 0; i < 3; ++i) p[names[i]] = values[i];
    return p;
}

void require_nonzero_at(const std::array<Expression, 3>& h, const Point& p, std::string_view where) {
    for (std::size_t i = 0; i < 3; ++i) {
        double value = 0.0;
        try {
            value = eval_numeric(h[i], p);
        } catch (const Error& e) {
            throw ValidationError("scale factor h" + std::to_string(i + 1) + " undefined at " +
                                  std::string(where) + ": " + e.what());
        }
        if (value == 0.0 || !std::isfinite(value)) {
            throw ValidationError("scale factor h" + std::to_string(i + 1) + " vanishes at " + std::string(where));
        }
    }
}

}  // namespace

CoordinateSystem make_coordinate_system(std::string label, std::array<std::string, 3> names,
                                        std::array<Expression, 3> scale_factors, Triple base_point,
                                        SamplingBox box) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_identifier(names[i])) throw ValidationError("invalid coordinate name '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (names[i] == names[j]) throw ValidationError("duplicate coordinate name '" + names[i] + "'");
        }
    }
    auto data = std::make_shared<CoordinateSystem::Data>();
    data->label = std::move(label);
    data->names = names;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string tag = "h" + std::to_string(i + 1);
        CanonicalForm h;
        try {
            h = canonicalize(scale_factors[i]);
        } catch (const Error& e) {
            throw ValidationError(tag + " is not expressible: " + e.what());
        }
        if (h.is_zero()) throw ValidationError(tag + " is zero");
        for (const auto& v : free_variables(scale_factors[i])) {
            if (std::find(names.begin(), names.end(), v) == names.end()) {
                throw ValidationError(tag + " references foreign variable '" + v + "'");
            }
        }
        auto inverse = h.reciprocal();
        if (!inverse) throw ValidationError("1/" + tag + " is not expressible as a single term");
        data->canonical_h[i] = std::move(h);
        data->inverse_h[i] = std::move(*inverse);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(box[i].lo <= box[i].hi)) throw ValidationError("sampling interval with lo > hi");
    }
    data->scale_factors = std::move(scale_factors);
    data->base_point = base_point;
    data->box = box;

    require_nonzero_at(data->scale_factors,
                       point_of(names, {base_point[0].get_d(), base_point[1].get_d(), base_point[2].get_d()}),
                       "the base point");
    require_nonzero_at(data->scale_factors,
                       point_of(names, {(box[0].lo + box[0].hi) / 2, (box[1].lo + box[1].hi) / 2,
                                        (box[2].lo + box[2].hi) / 2}),
                       "the sampling box centre");
    return CoordinateSystem(std::move(data));
}

CoordinateSystem builtin(std::string_view name) {
    static const CoordinateSystem cartesian = make_coordinate_system(
        "cartesian", {"x", "y", "z"}, {Expression(1), Expression(1), Expression(1)},
        {Rational(0), Rational(0), Rational(0)}, {Interval{-2, 2}, Interval{-2, 2}, Interval{-2, 2}});
    static const CoordinateSystem cylindrical = make_coordinate_system(
        "cylindrical", {"rho", "phi", "z"}, {Expression(1), Expression::variable("rho"), Expression(1)},
        {Rational(1), Rational(0), Rational(0)}, {Interval{0.5, 2}, Interval{0.1, 3}, Interval{-2, 2}});
    static const CoordinateSystem spherical = make_coordinate_system(
        "spherical", {"r", "theta", "phi"},
        {Expression(1), Expression::variable("r"),
         Expression::variable("r") * sin(Expression::variable("theta"))},
        {Rational(1), Rational(1), Rational(0)}, {Interval{0.5, 2}, Interval{0.1, 3}, Interval{0.1, 3}});

    if (name == "cartesian") return cartesian;
    if (name == "cylindrical") return cylindrical;
    if (name == "spherical") return spherical;
    throw UnknownSystem("unknown coordinate system '" + std::string(name) +
                        "' (expected cartesian, cylindrical or spherical)");
}

CoordinateSystem custom(std::array<std::string, 3> names, std::array<Expression, 3> scale_factors,
                        Triple base_point, SamplingBox box) {
    return make_coordinate_system("custom", std::move(names), std::move(scale_factors), base_point, box);
}

CoordinateSystem custom(std::array<std::string, 3> names, const std::array<std::string, 3>& scale_factors,
                        Triple base_point, SamplingBox box) {
    std::array<Expression, 3> parsed;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            parsed[i] = parse(scale_factors[i]);
        } catch (const Error& e) {
            throw ValidationError("h" + std::to_string(i + 1) + " '" + scale_factors[i] + "': " + e.what());
        }
    }
    return custom(std::move(names), std::move(parsed), base_point, box);
}

namespace {

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational parse_rational_literal(const std::string& text) {
    Expression e;
    try {
        e = parse(text);
    } catch (const Error&) {
        throw ValidationError("base coordinate '" + text + "' is not a rational");
    }
    auto value = canonicalize(e).constant_value();
    if (!value) throw ValidationError("base coordinate '" + text + "' is not a rational");
    return *value;
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ValidationError("'" + text + "' is not a number");
    }
}

}  // namespace

CoordinateSystem parse_coordinate_config(std::string_view text) {
    std::map<std::string, std::string> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string content = trim(line);
        if (content.empty()) continue;
        auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(std::string_view(content).substr(0, eq));
        if (key != "names" && key != "h1" && key != "h2" && key != "h3" && key != "base" && key != "box") {
            throw ValidationError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (!entries.emplace(key, trim(std::string_view(content).substr(eq + 1))).second) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    for (const char* key : {"names", "h1", "h2", "h3", "base", "box"}) {
        if (!entries.count(key)) throw ValidationError(std::string("missing key '") + key + "'");
    }

    auto names_list = split_commas(entries["names"]);
    auto base_list = split_commas(entries["base"]);
    auto box_list = split_commas(entries["box"]);
    if (names_list.size() != 3 || base_list.size() != 3 || box_list.size() != 3) {
        throw ValidationError("names, base and box each need exactly three comma-separated entries");
    }
    std::array<std::string, 3> names{names_list[0], names_list[1], names_list[2]};
    Triple base;
    SamplingBox box;
    for (std::size_t i = 0; i < 3; ++i) {
        base[i] = parse_rational_literal(base_list[i]);
        auto colon = box_list[i].find(':');
        if (colon == std::string::npos) throw ValidationError("box entry '" + box_list[i] + "' is not lo:hi");
        box[i] = {parse_double(trim(std::string_view(box_list[i]).substr(0, colon))),
                  parse_double(trim(std::string_view(box_list[i]).substr(colon + 1)))};
    }
    return custom(names, {entries["h1"], entries["h2"], entries["h3"]}, base, box);
}

CoordinateSystem load_coordinate_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open coordinate file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_coordinate_config(buffer.str());
}

}  // namespace vecinv
