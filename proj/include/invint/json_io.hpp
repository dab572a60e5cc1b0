#ifndef INVINT_JSON_IO_HPP
#define INVINT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "invint/finite_group.hpp"
#include "invint/poly.hpp"
#include "invint/tensor.hpp"
#include "invint/weingarten.hpp"

namespace invint {

using nlohmann::json;

// {"n": 2, "terms": [{"coeff": "-1", "exps": {"x12": 1, "x21": 1}}, ...]}
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// {"dim": n, "axes": ["v","c",...], "entries": ["p/q", ...]}  (flat row-major)
json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

// {"kind":"O","dim":3,"degree":2,"coeffs":[{"cycle_type":[2],"coeff":"..."}]}
json table_to_json(const WeingartenTable& t);
WeingartenTable table_from_json(const json& j);
std::string table_to_csv(const WeingartenTable& t);

// {"order":6,"mul":[[...],...],"names":["e","(12)",...]}
fg::FiniteGroup group_from_json(const json& j);

// A file is an array of irreps: [{"degree":2,"matrices":[[["1","0"],...],...]}, ...]
// Entries are "p/q" strings (rational backend) or {"re":..,"im":..} (complex).
struct LoadedIrreps {
    bool rational = true;
    fg::IrrepTable<Rat> rat;
    fg::IrrepTable<fg::Cplx> cplx;
};
LoadedIrreps irreps_from_json(const json& j);

// A function file is a flat array of scalars, one per group element.
std::vector<Rat> rat_values_from_json(const json& j);
std::vector<fg::Cplx> cplx_values_from_json(const json& j);
json rat_values_to_json(const std::vector<Rat>& v);
json cplx_values_to_json(const std::vector<fg::Cplx>& v);

json dual_to_json(const fg::DualElement<Rat>& d);
json dual_to_json(const fg::DualElement<fg::Cplx>& d);

json parse_file(const std::string& path);

}  // namespace invint

#endif
