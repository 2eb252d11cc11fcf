#include "rpa/format.hpp"

#include "rpa/error.hpp"

#include <sstream>

namespace rpa {

namespace {

std::string power_text(const Rational &exponent) {
    if (exponent == 1) {
        return "n";
    }
    if (is_integer(exponent) && exponent > 0) {
        return "n^" + to_string(exponent);
    }
    return "n^(" + to_string(exponent) + ")";
}

// Term with a nonnegative coefficient magnitude.
std::string term_text(const Rational &magnitude, const Rational &exponent) {
    if (exponent == 0) {
        return to_string(magnitude);
    }
    if (magnitude == 1) {
        return power_text(exponent);
    }
    return to_string(magnitude) + "*" + power_text(exponent);
}

std::string list_text(const auto &items) {
    std::string out = "[";
    bool first = true;
    for (const auto &item : items) {
        out += (first ? "" : ", ") + to_text(item);
        first = false;
    }
    return out + "]";
}

} // namespace

std::string to_text(const Puiseux &poly) {
    if (poly.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : poly.terms()) {
        const bool negative = t.coefficient < 0;
        const Rational magnitude = abs(t.coefficient);
        if (first) {
            out += (negative ? "-" : "") + term_text(magnitude, t.exponent);
        } else {
            out += (negative ? " - " : " + ") + term_text(magnitude, t.exponent);
        }
        first = false;
    }
    return out;
}

std::string to_text(const Germ &germ) {
    if (germ.modulus() == 1) {
        return to_text(germ.class_poly(0));
    }
    std::string out = "class mod " + std::to_string(germ.modulus()) + " { ";
    for (Natural r = 0; r < germ.modulus(); ++r) {
        out += (r ? "; " : "") + to_text(germ.class_poly(r));
    }
    return out + " }";
}

std::string to_text(const RpaReal &value) { return to_text(value.germ()); }

std::string to_text(const RpaComplex &value) {
    if (value.is_real()) {
        return to_text(value.re());
    }
    const std::string im = "(" + to_text(value.im()) + ")*i";
    if (value.re().is_zero()) {
        return im;
    }
    return to_text(value.re()) + " + " + im;
}

std::string to_text(const StepWave &wave) {
    return "wave { breaks = " + list_text(wave.grid().breakpoints()) +
           "; coeffs = " + list_text(wave.coeffs()) + " }";
}

std::string to_text(const GridOperator &op) {
    std::string rows = "[";
    for (std::size_t i = 0; i < op.dim(); ++i) {
        std::vector<RpaComplex> row;
        for (std::size_t j = 0; j < op.dim(); ++j) {
            row.push_back(op(i, j));
        }
        rows += (i ? ", " : "") + list_text(row);
    }
    rows += "]";
    return "op { grid = " + list_text(op.grid().breakpoints()) + "; matrix = " + rows + " }";
}

Json to_json(const Germ &germ) {
    Json classes = Json::array();
    for (const auto &poly : germ.classes()) {
        Json terms = Json::array();
        for (const auto &t : poly.terms()) {
            terms.push_back(Json{{"exp", to_string(t.exponent)}, {"coef", to_string(t.coefficient)}});
        }
        classes.push_back(std::move(terms));
    }
    return Json{{"modulus", germ.modulus()}, {"classes", std::move(classes)}};
}

Json to_json(const RpaReal &value) { return to_json(value.germ()); }

Json to_json(const RpaComplex &value) {
    return Json{{"re", to_json(value.re())}, {"im", to_json(value.im())}};
}

Json to_json(const StepWave &wave) {
    Json breaks = Json::array();
    for (const auto &b : wave.grid().breakpoints()) {
        breaks.push_back(to_json(b));
    }
    Json coeffs = Json::array();
    for (const auto &c : wave.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"breaks", std::move(breaks)}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const GridOperator &op) {
    Json grid = Json::array();
    for (const auto &b : op.grid().breakpoints()) {
        grid.push_back(to_json(b));
    }
    Json matrix = Json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < op.dim(); ++j) {
            row.push_back(to_json(op(i, j)));
        }
        matrix.push_back(std::move(row));
    }
    return Json{{"grid", std::move(grid)}, {"matrix", std::move(matrix)}};
}

Germ germ_from_json(const Json &json) {
    try {
        const Natural modulus = json.at("modulus").get<Natural>();
        const Json &classes = json.at("classes");
        if (!classes.is_array() || classes.size() != modulus) {
            throw Error(ErrorCode::InvalidArgument, "germ json: classes must list one entry per residue");
        }
        std::vector<Puiseux> polys;
        for (const auto &terms : classes) {
            std::vector<Term> out;
            for (const auto &t : terms) {
                out.push_back({parse_rational(t.at("exp").get<std::string>()),
                               parse_rational(t.at("coef").get<std::string>())});
            }
            polys.emplace_back(std::move(out));
        }
        return Germ(modulus, std::move(polys));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidArgument, std::string("germ json: ") + e.what());
    }
}

RpaReal real_from_json(const Json &json, const Filter &filter) {
    return RpaReal(germ_from_json(json), filter);
}

RpaComplex complex_from_json(const Json &json, const Filter &filter) {
    try {
        return {real_from_json(json.at("re"), filter), real_from_json(json.at("im"), filter)};
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidArgument, std::string("complex json: ") + e.what());
    }
}

} // namespace rpa
