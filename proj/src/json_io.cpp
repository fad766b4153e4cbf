#include "qq/json_io.hpp"

#include <string>

namespace qq {

using nlohmann::json;

json json_of(const QLaurent& c) {
  json out = json::array();
  for (const auto& [e, v] : c.terms()) out.push_back({e, v.get_str()});
  return out;
}

json json_of(const TorusElem& x) {
  json out = json::array();
  for (const auto& [e, c] : x.terms()) {
    json term;
    term["exponents"] = e;
    term["coeff"] = json_of(c);
    out.push_back(std::move(term));
  }
  return out;
}

json json_of(const TSeries& s) {
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(json_of(s.at(n)));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

json json_of_window(const QSystemState& st) {
  json out = json::object();
  for (const auto& [key, cell] : st.window) {
    std::string name =
        "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
    out[name] = json_of(cell);
  }
  return out;
}

}  // namespace qq
