#pragma once

#include "json.hpp"

#include "framemult/gabor.hpp"
#include "framemult/multiplier.hpp"

// JSON schemas:
//   complex    [re, im]
//   vector     [[re, im], ...]
//   matrix     row-major nested arrays of complex
//   frame      { "dim": d, "vectors": [vector, ...] }
//   multiplier { "symbol": vector, "phi": frame, "psi": frame }
//   gabor      { "L": int, "a": int, "b": int, "window": vector }
// Parsers throw InputError on any schema violation or non-finite value.

namespace framemult {

using Json = nlohmann::json;

Json to_json(const Complex& z);
Json to_json(const CVector& v);
Json to_json(const CMatrix& A);
Json to_json(const FrameSeq& phi);
Json to_json(const SymbolSeq& m);
Json to_json(const Multiplier& M);
Json to_json(const GaborSystem& G);
Json to_json(const InverseReport& report);

Complex complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
FrameSeq frame_from_json(const Json& j);
SymbolSeq symbol_from_json(const Json& j);
Multiplier multiplier_from_json(const Json& j);
GaborSystem gabor_from_json(const Json& j);

const char* classification_name(InverseReport::Classification c);

}  // namespace framemult
