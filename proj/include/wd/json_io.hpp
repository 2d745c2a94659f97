#ifndef WD_JSON_IO_HPP
#define WD_JSON_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "wd/fock_module.hpp"
#include "wd/module.hpp"
#include "wd/omega_module.hpp"
#include "wd/tensor_module.hpp"

namespace wd {

using Json = nlohmann::json;

// Rationals are written as "p/q" or "p"; integers are accepted on input.
Json rational_json(const Rational& q);
Rational json_rational(const Json& j, const std::string& pointer);

// A parsed module spec. Exactly one of f / omega / tensor is set, matching
// family ("F", "Omega", "T").
struct ModuleSpec {
    std::string family;
    std::shared_ptr<const FModule> f;
    std::shared_ptr<const OmegaModule> omega;
    std::shared_ptr<const TensorModule> tensor;

    const LieModule& module() const;
};

// Throws SchemaError with the JSON pointer of the first offending field.
// Parameter constraints (beta != 0, distinct entries, ...) are schema errors
// too, reported at the field that carries them.
ModuleSpec parse_module_spec(const Json& j, const std::string& pointer = "");
OmegaParams parse_omega_params(const Json& j, const std::string& pointer);
Json omega_params_json(const OmegaParams& p);

// {"lambda": "2", "p": "1/2", "B0": "a0", "C0": "-3", "D0": "L0 + a0"}; the
// polynomials are over (L0, a0).
Rank1ActionData parse_rank1_data(const Json& j, const std::string& pointer = "");
Json rank1_data_json(const Rank1ActionData& d);

// {"start": vec, "steps": [{"label", "op", "result"}]}; vectors and
// operators as text.
Json certificate_json(const Certificate& c);
Certificate parse_certificate(const Json& j, const LieModule& module, const std::string& pointer = "");

struct CheckResult {
    std::string check;
    bool pass = false;
    Json detail = Json::object();
    Json certificate = Json::array();
};

// {"checks": [{"check", "status": "pass"|"fail", "detail", "certificate"}]},
// sorted by check name.
Json report_json(std::vector<CheckResult> checks);

} // namespace wd

#endif
