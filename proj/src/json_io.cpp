#include "invint/json_io.hpp"

#include <fstream>

namespace invint {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw error(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) fail(where, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name, const std::string& where) {
    const json& f = field(j, name, where);
    if (!f.is_number_integer()) fail(where, std::string("field \"") + name + "\" must be an integer");
    return f.get<int>();
}

Rat rat_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail(where, "expected a \"p/q\" string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const error& e) {
        fail(where, e.what());
    }
}

}  // namespace

json poly_to_json(const Poly& p) {
    json terms = json::array();
    int n = p.n();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::object();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int k = e[i * n + j];
                if (k > 0) exps["x" + std::to_string(i + 1) + std::to_string(j + 1)] = k;
            }
        terms.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return {{"n", n}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
    const std::string where = "polynomial";
    int n = int_field(j, "n", where);
    if (n < 1 || n > 9) fail(where, "n must be between 1 and 9");
    Poly p(n);
    const json& terms = field(j, "terms", where);
    if (!terms.is_array()) fail(where, "\"terms\" must be an array");
    for (const json& t : terms) {
        Rat c = rat_from(field(t, "coeff", where), where + ".coeff");
        const json& exps = field(t, "exps", where);
        if (!exps.is_object()) fail(where, "\"exps\" must be an object");
        Exps e(n * n, 0);
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            const std::string& key = it.key();
            if (key.size() != 3 || key[0] != 'x' || !isdigit(key[1]) || !isdigit(key[2]))
                fail(where, "bad variable name \"" + key + "\" (expected e.g. \"x12\")");
            int i = key[1] - '0', jj = key[2] - '0';
            if (i < 1 || i > n || jj < 1 || jj > n)
                fail(where, "variable \"" + key + "\" out of range for n=" + std::to_string(n));
            if (!it.value().is_number_integer() || it.value().get<int>() < 1)
                fail(where, "exponent of \"" + key + "\" must be a positive integer");
            e[(i - 1) * n + (jj - 1)] += it.value().get<int>();
        }
        p.add_term(e, c);
    }
    return p;
}

json tensor_to_json(const Tensor& t) {
    json axes = json::array();
    for (auto v : t.axes()) axes.push_back(v == Variance::Vector ? "v" : "c");
    json entries = json::array();
    for (size_t i = 0; i < t.size(); ++i) entries.push_back(t[i].str());
    return {{"dim", t.dim()}, {"axes", axes}, {"entries", entries}};
}

Tensor tensor_from_json(const json& j) {
    const std::string where = "tensor";
    int dim = int_field(j, "dim", where);
    if (dim < 1) fail(where, "dim must be >= 1");
    const json& axes = field(j, "axes", where);
    if (!axes.is_array()) fail(where, "\"axes\" must be an array");
    std::vector<Variance> vs;
    for (const json& a : axes) {
        if (!a.is_string()) fail(where, "axis tags must be \"v\" or \"c\"");
        std::string s = a.get<std::string>();
        if (s == "v") vs.push_back(Variance::Vector);
        else if (s == "c") vs.push_back(Variance::Covector);
        else fail(where, "axis tag \"" + s + "\" is neither \"v\" nor \"c\"");
    }
    Tensor t(dim, vs);
    const json& entries = field(j, "entries", where);
    if (!entries.is_array() || entries.size() != t.size())
        fail(where, "\"entries\" must be an array of length dim^axes = " + std::to_string(t.size()));
    for (size_t i = 0; i < t.size(); ++i) t[i] = rat_from(entries[i], where + ".entries");
    return t;
}

json table_to_json(const WeingartenTable& t) {
    json coeffs = json::array();
    for (const auto& [ct, c] : t.coeffs)
        coeffs.push_back({{"cycle_type", ct.parts}, {"coeff", c.str()}});
    return {{"kind", kind_name(t.kind)}, {"dim", t.dim}, {"degree", t.degree}, {"coeffs", coeffs}};
}

WeingartenTable table_from_json(const json& j) {
    const std::string where = "weingarten table";
    WeingartenTable t;
    std::string k = field(j, "kind", where).get<std::string>();
    if (k == "O") t.kind = GroupKind::Orthogonal;
    else if (k == "Sp") t.kind = GroupKind::Symplectic;
    else fail(where, "kind must be \"O\" or \"Sp\"");
    t.dim = int_field(j, "dim", where);
    t.degree = int_field(j, "degree", where);
    for (const json& c : field(j, "coeffs", where)) {
        CycleType ct;
        for (const json& p : field(c, "cycle_type", where)) ct.parts.push_back(p.get<int>());
        t.coeffs.emplace_back(ct, rat_from(field(c, "coeff", where), where + ".coeff"));
    }
    return t;
}

std::string table_to_csv(const WeingartenTable& t) {
    std::string out = "kind,dim,degree,cycle_type,coeff\n";
    for (const auto& [ct, c] : t.coeffs) {
        std::string parts;
        for (size_t i = 0; i < ct.parts.size(); ++i)
            parts += (i ? "+" : "") + std::to_string(ct.parts[i]);
        out += kind_name(t.kind) + "," + std::to_string(t.dim) + "," + std::to_string(t.degree) +
               "," + parts + "," + c.str() + "\n";
    }
    return out;
}

fg::FiniteGroup group_from_json(const json& j) {
    const std::string where = "group";
    int order = int_field(j, "order", where);
    const json& mul = field(j, "mul", where);
    if (!mul.is_array() || static_cast<int>(mul.size()) != order)
        fail(where, "\"mul\" must be an order x order array");
    std::vector<std::vector<int>> table;
    for (const json& row : mul) {
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            fail(where, "\"mul\" must be an order x order array");
        table.push_back(row.get<std::vector<int>>());
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return fg::FiniteGroup::from_table(std::move(table), std::move(names));
}

namespace {

bool entry_is_complex(const json& j) { return j.is_object(); }

fg::Cplx cplx_from(const json& j, const std::string& where) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im")) fail(where, "complex entry needs re and im");
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    }
    if (j.is_number()) return {j.get<double>(), 0.0};
    fail(where, "expected a complex entry {re, im}");
}

template <class K>
fg::IrrepTable<K> irreps_as(const json& j, const std::string& where,
                            K (*conv)(const json&, const std::string&)) {
    fg::IrrepTable<K> t;
    for (const json& ir : j) {
        fg::Irrep<K> irrep;
        irrep.degree = int_field(ir, "degree", where);
        const json& mats = field(ir, "matrices", where);
        if (!mats.is_array()) fail(where, "\"matrices\" must be an array");
        for (const json& mj : mats) {
            fg::Mat<K> m(irrep.degree);
            if (!mj.is_array() || static_cast<int>(mj.size()) != irrep.degree)
                fail(where, "matrix must be degree x degree");
            for (int r = 0; r < irrep.degree; ++r) {
                if (!mj[r].is_array() || static_cast<int>(mj[r].size()) != irrep.degree)
                    fail(where, "matrix must be degree x degree");
                for (int c = 0; c < irrep.degree; ++c) m.at(r, c) = conv(mj[r][c], where);
            }
            irrep.rho.push_back(std::move(m));
        }
        t.irreps.push_back(std::move(irrep));
    }
    return t;
}

Rat rat_conv(const json& j, const std::string& where) { return rat_from(j, where); }
fg::Cplx cplx_conv(const json& j, const std::string& where) { return cplx_from(j, where); }

}  // namespace

LoadedIrreps irreps_from_json(const json& j) {
    const std::string where = "irrep table";
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of irreps");
    const json& first = field(j[0], "matrices", where);
    if (!first.is_array() || first.empty()) fail(where, "\"matrices\" must be a nonempty array");
    // probe one entry to pick the backend
    const json* probe = &first[0];
    while (probe->is_array() && !probe->empty()) probe = &(*probe)[0];
    LoadedIrreps out;
    out.rational = !entry_is_complex(*probe);
    if (out.rational) out.rat = irreps_as<Rat>(j, where, rat_conv);
    else out.cplx = irreps_as<fg::Cplx>(j, where, cplx_conv);
    return out;
}

std::vector<Rat> rat_values_from_json(const json& j) {
    if (!j.is_array()) throw error("function: expected a flat array of values");
    std::vector<Rat> v;
    for (const json& x : j) v.push_back(rat_from(x, "function"));
    return v;
}

std::vector<fg::Cplx> cplx_values_from_json(const json& j) {
    if (!j.is_array()) throw error("function: expected a flat array of values");
    std::vector<fg::Cplx> v;
    for (const json& x : j) {
        if (x.is_string()) {
            Rat r = Rat::parse(x.get<std::string>());
            v.push_back({mpq_class(r.num()).get_d() / mpq_class(r.den()).get_d(), 0.0});
        } else {
            v.push_back(cplx_from(x, "function"));
        }
    }
    return v;
}

json rat_values_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

json cplx_values_to_json(const std::vector<fg::Cplx>& v) {
    json a = json::array();
    for (const fg::Cplx& x : v) a.push_back({{"im", x.imag()}, {"re", x.real()}});
    return a;
}

json dual_to_json(const fg::DualElement<Rat>& d) {
    json blocks = json::array();
    for (const auto& m : d) {
        json rows = json::array();
        for (int r = 0; r < m.n; ++r) {
            json row = json::array();
            for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c).str());
            rows.push_back(row);
        }
        blocks.push_back(rows);
    }
    return {{"blocks", blocks}};
}

json dual_to_json(const fg::DualElement<fg::Cplx>& d) {
    json blocks = json::array();
    for (const auto& m : d) {
        json rows = json::array();
        for (int r = 0; r < m.n; ++r) {
            json row = json::array();
            for (int c = 0; c < m.n; ++c)
                row.push_back({{"im", m.at(r, c).imag()}, {"re", m.at(r, c).real()}});
            rows.push_back(row);
        }
        blocks.push_back(rows);
    }
    return {{"blocks", blocks}};
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace invint
