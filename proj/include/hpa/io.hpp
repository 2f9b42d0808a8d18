#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hpa/hopf.hpp"
#include "hpa/linalg.hpp"
#include "hpa/network.hpp"
#include "hpa/report.hpp"

namespace hpa {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_to_json(const Rational& r);
/// Integer, "p/q" string or [p, q].
Rational rational_from_json(const json& j);

/// {"rat": [p, q], "delta": [p, q]}.
json scalar_to_json(const Scalar& s);
/// Object form, or any rational form.  n is δ².
Scalar scalar_from_json(const json& j, long n);

StructureConstants constants_from_json(const json& j);
json constants_to_json(const StructureConstants& sc);

/// {"type": "constants" | "group" | "dual", ...}; dual specs name their
/// source by a path relative to base_dir, or inline.
HopfAlgebra hopf_from_json(const json& j, const std::string& base_dir, int delta_sign = +1);
HopfAlgebra load_hopf(const std::string& path, int delta_sign = +1);

/// Labels are coefficient arrays or basis names.
LabeledNetwork network_from_json(const json& j, const HopfAlgebra& h);
LabeledNetwork load_network(const std::string& path, const HopfAlgebra& h);
json network_to_json(const LabeledNetwork& n);

json report_to_json(const Report& r);
json matrix_to_json(const Matrix& m);

json read_json_file(const std::string& path);

}  // namespace hpa
