#pragma once

// JSON encoders for the core value types. Shapes are stable; consumers key
// on the CLI's top-level "schema" field:
//   QLaurent  -> [[q_exponent, "coefficient"], ...] ascending q-exponent,
//                coefficients as decimal strings (allows arbitrary size)
//   TorusElem -> [{"exponents": [...], "coeff": <QLaurent>}, ...] in
//                ascending lex order on the exponent vectors
//   TSeries   -> {"order": N, "coeffs": [<TorusElem> per t-degree]}
//   window    -> {"(i,n)": <TorusElem>, ...}

#include "qq/oracle.hpp"
#include "qq/qlaurent.hpp"
#include "qq/qtorus.hpp"
#include "qq/tseries.hpp"

#include "json.hpp"

namespace qq {

nlohmann::json json_of(const QLaurent& c);
nlohmann::json json_of(const TorusElem& x);
nlohmann::json json_of(const TSeries& s);
nlohmann::json json_of_window(const QSystemState& st);

}  // namespace qq
