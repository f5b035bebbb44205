#ifndef ORBITCERT_TRANSCRIPT_HPP
#define ORBITCERT_TRANSCRIPT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "orbitcert/lie_algebra.hpp"
#include "orbitcert/qmatrix.hpp"
#include "orbitcert/rational.hpp"

namespace orbitcert {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rat& x) { return to_string(x); }

inline Json json_of(const QVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline Json json_of(const Element& e) { return json_of(e.coords); }

inline Json json_of(const std::vector<QVec>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(json_of(v));
  return arr;
}

inline Json json_of(const std::vector<Element>& es) {
  Json arr = Json::array();
  for (const auto& e : es) arr.push_back(json_of(e.coords));
  return arr;
}

/// Ordered log of named computation steps. Verbosity: 0 = quiet (verdict
/// only), 1 = default (certificates, LP systems), 2 = trace (eigenbases and
/// intermediate data too).
struct Transcript {
  int verbosity = 1;
  Json steps = Json::array();

  void add(const std::string& name, Json payload, int level = 1) {
    if (level > verbosity) return;
    Json step;
    step["step"] = name;
    step["data"] = std::move(payload);
    steps.push_back(std::move(step));
  }
};

}  // namespace orbitcert

#endif
