#include "framemult/json_io.hpp"

#include <cmath>

namespace framemult {

namespace {

double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite value");
    return x;
}

std::size_t positive_integer(const Json& j, const char* what) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
        throw InputError(std::string(what) + ": expected a positive integer");
    return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVector& v) {
    Json j = Json::array();
    for (const auto& z : v) j.push_back(to_json(z));
    return j;
}

Json to_json(const CMatrix& A) {
    Json j = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(to_json(A(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const FrameSeq& phi) {
    Json vectors = Json::array();
    for (const auto& v : phi.vectors()) vectors.push_back(to_json(v));
    return Json{{"dim", phi.dim()}, {"vectors", std::move(vectors)}};
}

Json to_json(const SymbolSeq& m) {
    Json j = Json::array();
    for (const auto& z : m.values()) j.push_back(to_json(z));
    return j;
}

Json to_json(const Multiplier& M) {
    return Json{{"symbol", to_json(M.m)}, {"phi", to_json(M.phi)}, {"psi", to_json(M.psi)}};
}

Json to_json(const GaborSystem& G) {
    return Json{{"L", G.lattice.L},
                {"a", G.lattice.a},
                {"b", G.lattice.b},
                {"window", to_json(G.window)}};
}

const char* classification_name(InverseReport::Classification c) {
    switch (c) {
        case InverseReport::Classification::TwoSided: return "two_sided";
        case InverseReport::Classification::LeftOnly: return "left_only";
        case InverseReport::Classification::RightOnly: return "right_only";
        case InverseReport::Classification::NotInvertible: return "not_invertible";
    }
    return "unknown";
}

Json to_json(const InverseReport& report) {
    Json j{{"classification", classification_name(report.classification)},
           {"residual", report.residual}};
    j["left_residual"] = report.left_residual ? Json(*report.left_residual) : Json(nullptr);
    j["right_residual"] = report.right_residual ? Json(*report.right_residual) : Json(nullptr);
    j["inverse"] = report.inverse ? to_json(*report.inverse) : Json(nullptr);
    return j;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InputError("complex: expected a two-element array [re, im]");
    return {finite_number(j[0], "complex re"), finite_number(j[1], "complex im")};
}

CVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector: expected an array");
    std::vector<Complex> xs;
    xs.reserve(j.size());
    for (const auto& e : j) xs.push_back(complex_from_json(e));
    return CVector(std::move(xs));
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix: expected a nonempty array of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw InputError("matrix: rows must be nonempty arrays");
    CMatrix A(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) A(i, k) = complex_from_json(j[i][k]);
    }
    return A;
}

FrameSeq frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
        throw InputError("frame: expected { \"dim\", \"vectors\" }");
    const std::size_t dim = positive_integer(j.at("dim"), "frame dim");
    const Json& vs = j.at("vectors");
    if (!vs.is_array() || vs.empty()) throw InputError("frame: vectors must be a nonempty array");
    std::vector<CVector> vectors;
    vectors.reserve(vs.size());
    for (const auto& v : vs) vectors.push_back(vector_from_json(v));
    try {
        return FrameSeq(dim, std::move(vectors));
    } catch (const DimensionError& e) {
        throw InputError(std::string("frame: ") + e.what());
    }
}

SymbolSeq symbol_from_json(const Json& j) {
    const CVector v = vector_from_json(j);
    if (v.dim() == 0) throw InputError("symbol: must be nonempty");
    return SymbolSeq(v.entries());
}

Multiplier multiplier_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("symbol") || !j.contains("phi") || !j.contains("psi"))
        throw InputError("multiplier: expected { \"symbol\", \"phi\", \"psi\" }");
    try {
        return Multiplier(symbol_from_json(j.at("symbol")), frame_from_json(j.at("phi")),
                          frame_from_json(j.at("psi")));
    } catch (const DimensionError& e) {
        throw InputError(std::string("multiplier: ") + e.what());
    }
}

GaborSystem gabor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("L") || !j.contains("a") || !j.contains("b") ||
        !j.contains("window"))
        throw InputError("gabor: expected { \"L\", \"a\", \"b\", \"window\" }");
    try {
        return GaborSystem(vector_from_json(j.at("window")),
                           Lattice(positive_integer(j.at("L"), "gabor L"),
                                   positive_integer(j.at("a"), "gabor a"),
                                   positive_integer(j.at("b"), "gabor b")));
    } catch (const DimensionError& e) {
        throw InputError(std::string("gabor: ") + e.what());
    }
}

}  // namespace framemult
