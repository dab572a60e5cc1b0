// invint: exact invariant integrals on Gl/Sl/O/Sp and finite-group harmonic
// analysis, JSON in/out. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "invint/cayley.hpp"
#include "invint/json_io.hpp"
#include "invint/selftest.hpp"
#include "invint/weingarten.hpp"

namespace {

using namespace invint;

std::string data_dir() {
    if (const char* s = std::getenv("INVINT_DATA_DIR")) return s;
    return INVINT_DATA_DIR;
}

// Bare names resolve to the shipped tables; anything with a path or
// extension is used as-is.
std::string resolve(const std::string& name, const char* suffix) {
    if (name.find('/') != std::string::npos || name.find(".json") != std::string::npos)
        return name;
    return data_dir() + "/groups/" + name + "." + suffix + ".json";
}

void emit(const std::string& out, const std::string& content) {
    if (out == "-") {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out);
    check(static_cast<bool>(f), "cannot open output file: " + out);
    f << content;
    if (content.empty() || content.back() != '\n') f << "\n";
}

GroupKind parse_kind(const std::string& s) {
    if (s == "O") return GroupKind::Orthogonal;
    if (s == "Sp") return GroupKind::Symplectic;
    throw error("kind must be O or Sp, got \"" + s + "\"");
}

std::vector<int> parse_indices(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw error("bad element index \"" + tok + "\"");
        }
    }
    check(!out.empty(), "empty element list");
    return out;
}

struct FgContext {
    fg::FiniteGroup group;
    LoadedIrreps irreps;
};

FgContext load_fg(const std::string& group_arg, const std::string& irreps_arg) {
    FgContext ctx;
    ctx.group = group_from_json(parse_file(resolve(group_arg, "group")));
    ctx.irreps = irreps_from_json(parse_file(resolve(irreps_arg, "irreps")));
    if (ctx.irreps.rational)
        ctx.irreps.rat.validate(ctx.group);
    else
        ctx.irreps.cplx.validate(ctx.group);
    return ctx;
}

template <class K>
fg::GroupFunction<K> load_fn(const FgContext& ctx, const std::string& path);

template <>
fg::GroupFunction<Rat> load_fn<Rat>(const FgContext& ctx, const std::string& path) {
    auto v = rat_values_from_json(parse_file(path));
    check(static_cast<int>(v.size()) == ctx.group.order,
          "function in " + path + " has " + std::to_string(v.size()) + " values, group order is " +
              std::to_string(ctx.group.order));
    return v;
}

template <>
fg::GroupFunction<fg::Cplx> load_fn<fg::Cplx>(const FgContext& ctx, const std::string& path) {
    auto v = cplx_values_from_json(parse_file(path));
    check(static_cast<int>(v.size()) == ctx.group.order,
          "function in " + path + " has " + std::to_string(v.size()) + " values, group order is " +
              std::to_string(ctx.group.order));
    return v;
}

json report_to_json(const fg::PairingReport<Rat>& r) {
    return {{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"equal", r.equal}};
}

json report_to_json(const fg::PairingReport<fg::Cplx>& r) {
    return {{"lhs", {{"im", r.lhs.imag()}, {"re", r.lhs.real()}}},
            {"rhs", {{"im", r.rhs.imag()}, {"re", r.rhs.real()}}},
            {"equal", r.equal}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant integrals on classical groups"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gl-integral
    auto* gl = app.add_subcommand("gl-integral", "w_Gl_n of p/det^s from a polynomial file");
    int gl_n = 0, gl_s = 0;
    std::string gl_poly, gl_out = "-";
    gl->add_option("--n", gl_n, "matrix size")->required();
    gl->add_option("--poly", gl_poly, "polynomial JSON file")->required();
    gl->add_option("--det-power", gl_s, "denominator power s")->required();
    gl->add_option("--out", gl_out, "output path or -");
    gl->callback([&] {
        Poly p = poly_from_json(parse_file(gl_poly));
        check(p.n() == gl_n, "--n does not match the polynomial file");
        emit(gl_out, gl_integral({gl_n, p, gl_s}).str());
    });

    // ---- sl-integral
    auto* sl = app.add_subcommand("sl-integral", "w_Sl_n of a polynomial representative");
    int sl_n = 0;
    std::string sl_poly, sl_out = "-";
    sl->add_option("--n", sl_n, "matrix size")->required();
    sl->add_option("--poly", sl_poly, "polynomial JSON file")->required();
    sl->add_option("--out", sl_out, "output path or -");
    sl->callback([&] {
        Poly p = poly_from_json(parse_file(sl_poly));
        check(p.n() == sl_n, "--n does not match the polynomial file");
        emit(sl_out, sl_integral(p, sl_n).str());
    });

    // ---- sl-dim
    auto* sd = app.add_subcommand("sl-dim", "dim of the Sl_n invariants of E^(ox nm)");
    int sd_n = 0, sd_m = 0;
    std::string sd_out = "-";
    sd->add_option("--n", sd_n, "matrix size")->required();
    sd->add_option("--m", sd_m, "tensor power per n")->required();
    sd->add_option("--out", sd_out, "output path or -");
    sd->callback([&] { emit(sd_out, sl_invariant_dim(sd_n, sd_m).get_str()); });

    // ---- weingarten
    auto* wg = app.add_subcommand("weingarten", "coefficient table for O or Sp");
    std::string wg_kind, wg_out = "-", wg_format = "json";
    int wg_dim = 0, wg_deg = 0;
    wg->add_option("--kind", wg_kind, "O or Sp")->required();
    wg->add_option("--dim", wg_dim, "dimension of E")->required();
    wg->add_option("--degree", wg_deg, "degree m")->required();
    wg->add_option("--out", wg_out, "output path or -");
    wg->add_option("--format", wg_format, "json or csv");
    wg->callback([&] {
        WeingartenTable t = weingarten_coefficients(wg_deg, wg_dim, parse_kind(wg_kind));
        if (wg_format == "json")
            emit(wg_out, table_to_json(t).dump(1));
        else if (wg_format == "csv")
            emit(wg_out, table_to_csv(t));
        else
            throw error("format must be json or csv");
    });

    // ---- project
    auto* pj = app.add_subcommand("project", "invariant projection of a tensor in E^(ox k)");
    std::string pj_kind, pj_tensor, pj_out = "-";
    int pj_dim = 0;
    pj->add_option("--kind", pj_kind, "O or Sp")->required();
    pj->add_option("--dim", pj_dim, "dimension of E")->required();
    pj->add_option("--tensor", pj_tensor, "tensor JSON file")->required();
    pj->add_option("--out", pj_out, "output path or -");
    pj->callback([&] {
        Tensor t = tensor_from_json(parse_file(pj_tensor));
        check(t.dim() == pj_dim, "--dim does not match the tensor file");
        emit(pj_out, tensor_to_json(project_invariants(t, pj_dim, parse_kind(pj_kind))).dump(1));
    });

    // ---- fg
    auto* f = app.add_subcommand("fg", "finite-group harmonic analysis");
    f->require_subcommand(1);
    std::string fg_group, fg_irreps, fg_fn, fg_fn2, fg_out = "-", fg_sub, fg_rep;
    int fg_index = 0;

    auto add_common = [&](CLI::App* sub, bool needs_fn) {
        sub->add_option("--group", fg_group, "group JSON file or builtin name")->required();
        sub->add_option("--irreps", fg_irreps, "irrep JSON file or builtin name")->required();
        if (needs_fn) sub->add_option("--fn", fg_fn, "function JSON file")->required();
        sub->add_option("--out", fg_out, "output path or -");
    };

    auto* ff = f->add_subcommand("fourier", "Fourier transform of a function");
    add_common(ff, true);
    ff->callback([&] {
        FgContext ctx = load_fg(fg_group, fg_irreps);
        if (ctx.irreps.rational) {
            auto a = load_fn<Rat>(ctx, fg_fn);
            emit(fg_out, dual_to_json(fg::fourier(ctx.group, ctx.irreps.rat, a)).dump(1));
        } else {
            auto a = load_fn<fg::Cplx>(ctx, fg_fn);
            emit(fg_out, dual_to_json(fg::fourier(ctx.group, ctx.irreps.cplx, a)).dump(1));
        }
    });

    auto* fc = f->add_subcommand("convolve", "convolution a * b");
    add_common(fc, true);
    fc->add_option("--fn2", fg_fn2, "second function JSON file")->required();
    fc->callback([&] {
        FgContext ctx = load_fg(fg_group, fg_irreps);
        if (ctx.irreps.rational) {
            auto a = load_fn<Rat>(ctx, fg_fn);
            auto b = load_fn<Rat>(ctx, fg_fn2);
            emit(fg_out, rat_values_to_json(fg::convolution(ctx.group, a, b)).dump(1));
        } else {
            auto a = load_fn<fg::Cplx>(ctx, fg_fn);
            auto b = load_fn<fg::Cplx>(ctx, fg_fn2);
            emit(fg_out, cplx_values_to_json(fg::convolution(ctx.group, a, b)).dump(1));
        }
    });

    auto* fp = f->add_subcommand("parseval", "both sides of the Parseval pairing");
    add_common(fp, true);
    fp->add_option("--fn2", fg_fn2, "second function JSON file")->required();
    fp->callback([&] {
        FgContext ctx = load_fg(fg_group, fg_irreps);
        bool equal;
        if (ctx.irreps.rational) {
            auto rep = fg::parseval_pairing(ctx.group, ctx.irreps.rat, load_fn<Rat>(ctx, fg_fn),
                                            load_fn<Rat>(ctx, fg_fn2));
            emit(fg_out, report_to_json(rep).dump(1));
            equal = rep.equal;
        } else {
            auto rep = fg::parseval_pairing(ctx.group, ctx.irreps.cplx,
                                            load_fn<fg::Cplx>(ctx, fg_fn),
                                            load_fn<fg::Cplx>(ctx, fg_fn2));
            emit(fg_out, report_to_json(rep).dump(1));
            equal = rep.equal;
        }
        check(equal, "parseval sides disagree (implementation bug)");
    });

    auto* fo = f->add_subcommand("poisson", "Poisson summation over a normal subgroup");
    add_common(fo, true);
    fo->add_option("--subgroup", fg_sub, "comma-separated element indices")->required();
    fo->callback([&] {
        FgContext ctx = load_fg(fg_group, fg_irreps);
        std::vector<int> sub = parse_indices(fg_sub);
        bool equal;
        if (ctx.irreps.rational) {
            auto rep = fg::poisson_check(ctx.group, sub, load_fn<Rat>(ctx, fg_fn), ctx.irreps.rat);
            emit(fg_out, report_to_json(rep).dump(1));
            equal = rep.equal;
        } else {
            auto rep = fg::poisson_check(ctx.group, sub, load_fn<fg::Cplx>(ctx, fg_fn),
                                         ctx.irreps.cplx);
            emit(fg_out, report_to_json(rep).dump(1));
            equal = rep.equal;
        }
        check(equal, "poisson sides disagree (implementation bug)");
    });

    auto* fj = f->add_subcommand("project", "isotypic projection of a representation");
    add_common(fj, false);
    fj->add_option("--rep", fg_rep, "representation JSON file, or 'regular'")->required();
    fj->add_option("--index", fg_index, "irrep index")->required();
    fj->callback([&] {
        FgContext ctx = load_fg(fg_group, fg_irreps);
        check(ctx.irreps.rational, "fg project requires the rational backend");
        std::vector<fg::Mat<Rat>> rep;
        if (fg_rep == "regular") {
            rep = fg::regular_representation<Rat>(ctx.group);
        } else {
            json j = parse_file(fg_rep);
            LoadedIrreps r = irreps_from_json(json::array({j}));
            check(r.rational, "representation must use \"p/q\" entries");
            rep = r.rat.irreps[0].rho;
        }
        check(static_cast<int>(rep.size()) == ctx.group.order,
              "representation has the wrong number of matrices");
        fg::Mat<Rat> p = fg::isotypic_projection(ctx.group, ctx.irreps.rat, rep, fg_index);
        MatQ q(p.n, p.n);
        for (int r = 0; r < p.n; ++r)
            for (int c = 0; c < p.n; ++c) q.at(r, c) = p.at(r, c);
        json rows = json::array();
        for (int r = 0; r < p.n; ++r) {
            json row = json::array();
            for (int c = 0; c < p.n; ++c) row.push_back(p.at(r, c).str());
            rows.push_back(row);
        }
        emit(fg_out, json{{"matrix", rows}, {"rank", rank(q)}}.dump(1));
    });

    // ---- selftest
    auto* st = app.add_subcommand("selftest", "run the exact-identity suite");
    st->callback([&] {
        int failures = invint::selftest::run_all(std::cout);
        if (failures) {
            std::cout << failures << " check(s) failed\n";
            exit_code = 1;
        } else {
            std::cout << "all checks passed\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const invint::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
