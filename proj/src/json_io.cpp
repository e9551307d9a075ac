#include "circim/json_io.hpp"

#include <json.hpp>

#include "circim/errors.hpp"

namespace circim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

BigRational rational_field(const ordered_json& v, const char* where) {
    if (v.is_string()) {
        try {
            return BigRational::from_string(v.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(std::string(where) + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return BigRational(v.get<long>());
    throw input_error(std::string(where) + ": expected a rational as \"p/q\" string or integer");
}

int int_field(const ordered_json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw input_error(std::string("missing or non-integer \"") + key + "\" field");
    return obj[key].get<int>();
}

ordered_json gaussian_to_json(const GaussianRational& c) {
    return ordered_json{{"re", c.re.str()}, {"im", c.im.str()}};
}

}  // namespace

std::string to_json(const LaurentPolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(ordered_json{{"k", k}, {"re", c.re.str()}, {"im", c.im.str()}});
    ordered_json j{{"terms", std::move(terms)}};
    return j.dump(2) + "\n";
}

LaurentPolynomial laurent_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw input_error("polynomial JSON must be an object with a \"terms\" array");
    LaurentPolynomial p;
    for (const auto& item : j["terms"]) {
        if (!item.is_object()) throw input_error("each term must be an object");
        const int k = int_field(item, "k");
        BigRational re = item.contains("re") ? rational_field(item["re"], "re") : BigRational();
        BigRational im = item.contains("im") ? rational_field(item["im"], "im") : BigRational();
        p.add_term(k, GaussianRational(std::move(re), std::move(im)));
    }
    if (p.is_zero() || p.is_constant())
        throw input_error("the polynomial is constant; a degree or a pole is required");
    return p;
}

std::string to_json(const BivariatePolynomial& h) {
    const bool xy = h.tag() == VarTag::XY;
    ordered_json terms = ordered_json::array();
    for (const auto& [ij, c] : h.terms()) {
        ordered_json term{{"i", ij.first}, {"j", ij.second}};
        term["c"] = xy ? ordered_json(c.re.str()) : gaussian_to_json(c);
        terms.push_back(std::move(term));
    }
    ordered_json j{{"vars", xy ? ordered_json::array({"x", "y"}) : ordered_json::array({"w", "wbar"})},
                   {"terms", std::move(terms)}};
    return j.dump(2) + "\n";
}

BivariatePolynomial bivariate_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    if (!j.is_object() || !j.contains("vars") || !j["vars"].is_array() || j["vars"].size() != 2)
        throw input_error("bivariate JSON must carry a two-element \"vars\" array");
    if (!j["vars"][0].is_string())
        throw input_error("bivariate JSON must carry a two-element \"vars\" array");
    const std::string v0 = j["vars"][0].get<std::string>();
    VarTag tag;
    if (v0 == "x")
        tag = VarTag::XY;
    else if (v0 == "w")
        tag = VarTag::WWbar;
    else
        throw input_error("unknown variable set: " + v0);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw input_error("bivariate JSON must carry a \"terms\" array");

    BivariatePolynomial h(tag);
    for (const auto& item : j["terms"]) {
        if (!item.is_object() || !item.contains("c")) throw input_error("each term needs a \"c\" coefficient");
        const int i = int_field(item, "i");
        const int jj = int_field(item, "j");
        if (i < 0 || jj < 0) throw input_error("bivariate exponents must be nonnegative");
        GaussianRational c;
        if (item["c"].is_object()) {
            if (tag == VarTag::XY) throw input_error("(x, y) coefficients must be real rationals");
            BigRational re = item["c"].contains("re") ? rational_field(item["c"]["re"], "c.re") : BigRational();
            BigRational im = item["c"].contains("im") ? rational_field(item["c"]["im"], "c.im") : BigRational();
            c = GaussianRational(std::move(re), std::move(im));
        } else {
            c = GaussianRational(rational_field(item["c"], "c"));
        }
        h.add_term(i, jj, c);
    }
    return h;
}

std::string to_json(const ClassificationReport& rep) {
    ordered_json j{{"verdict", to_string(rep.verdict)}};
    if (rep.eta_squared) j["eta_squared"] = gaussian_to_json(*rep.eta_squared);
    if (rep.K) j["K"] = *rep.K;
    if (rep.matched_angle) j["matched_angle"] = *rep.matched_angle;
    if (rep.min_angle_gap) j["min_angle_gap"] = *rep.min_angle_gap;
    return j.dump(2) + "\n";
}

std::string to_json(const BoundReport& rep) {
    ordered_json j{{"m", rep.m}, {"n", rep.n},     {"r", rep.r},
                   {"s", rep.s}, {"bound", rep.bound}, {"common_factor", rep.common_factor}};
    if (rep.numeric_count) j["numeric_count"] = *rep.numeric_count;
    return j.dump(2) + "\n";
}

}  // namespace circim
