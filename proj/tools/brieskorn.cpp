/*
   Copyright 2026 The brieskorn-knots Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brieskorn/exponents.hpp"
#include "brieskorn/groupring.hpp"
#include "brieskorn/json_io.hpp"
#include "brieskorn/ratmatrix.hpp"
#include "brieskorn/report.hpp"
#include "brieskorn/reproduce.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/signatures.hpp"

using namespace brieskorn;

namespace {

constexpr int kMismatch = 1;
constexpr int kInvalid = 2;

struct Options {
    std::string exponents;
    std::string second;
    std::string matrix_file;
    std::string parity;
    std::string only;
    std::optional<long> n;
    std::vector<std::uint64_t> rs;
    unsigned long by = 0;
    std::size_t max_dim = 1024;
    long height_bound = 3;
    bool json = false;
    bool exact = false;
    bool tensor = false;
};

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string matrix_text(const RatMatrix& a) {
    std::string s = a.to_string();
    if (!s.empty() && s.back() != '\n') s += '\n';
    return s;
}

void check_dim(const Options& o, const mpz_class& dim) {
    if (dim > static_cast<unsigned long>(o.max_dim))
        throw std::invalid_argument("dimension " + dim.get_str() + " exceeds --max-dim " + std::to_string(o.max_dim));
}

int parity_flag(const std::string& p) {
    if (p == "even") return 1;
    if (p == "odd") return -1;
    throw std::invalid_argument("--parity must be even or odd, got '" + p + "'");
}

// From --matrix-file, or the Brieskorn presentation of the positional exponents.
SeifertPresentation presentation(const Options& o) {
    SeifertPresentation p;
    if (!o.matrix_file.empty()) {
        p = read_presentation_file(o.matrix_file);
    } else {
        if (o.exponents.empty()) throw std::invalid_argument("give exponents or --matrix-file");
        const ExponentMultiset e = ExponentMultiset::parse(o.exponents);
        check_dim(o, e.milnor_number());
        p = brieskorn_presentation(e);
    }
    if (!o.parity.empty()) p.parity = parity_flag(o.parity);
    check_dim(o, p.L.rows());
    return p;
}

int run(const std::string& cmd, const Options& o) {
    if (cmd == "analyze") {
        const AnalysisReport r = analyze(ExponentMultiset::parse(o.exponents), o.n);
        emit(o, to_json(r), to_text(r));
    } else if (cmd == "compare") {
        const CompareReport r = compare(ExponentMultiset::parse(o.exponents), ExponentMultiset::parse(o.second));
        emit(o, to_json(r), to_text(r));
    } else if (cmd == "divisor") {
        const ExponentMultiset e = ExponentMultiset::parse(o.exponents);
        const LambdaCombo d = alexander_divisor(e);
        const CycloFactorization f = to_cyclotomic(d);
        emit(o,
             Json{{"exponents", to_json(e)},
                  {"divisor", to_json(d)},
                  {"cyclotomic", to_json(f)},
                  {"milnor_number", integer_json(e.milnor_number())}},
             "divisor: " + d.to_string() + "\ncyclotomic: " + f.to_string() +
                 "\nmilnor number: " + e.milnor_number().get_str() + "\n");
    } else if (cmd == "essential-set") {
        const auto s = essential_exponent_set(ExponentMultiset::parse(o.exponents));
        emit(o, Json(s), set_string(s) + "\n");
    } else if (cmd == "spherical") {
        const ExponentMultiset e = ExponentMultiset::parse(o.exponents);
        const long n = o.n.value_or(e.n());
        const SphericityVerdict v = is_spherical(e, n);
        emit(o, Json{{"exponents", to_json(e)}, {"n", n}, {"spherical", v.spherical}, {"n2_caveat", v.n2_caveat}},
             std::string(v.spherical ? "spherical" : "not spherical") +
                 (v.n2_caveat ? " (n = 2: homology sphere criterion)" : "") + "\n");
    } else if (cmd == "seifert") {
        const SeifertPresentation p = presentation(o);
        const RatMatrix s = intersection_form(p);
        Json j = to_json(p);
        j["intersection_form"] = to_json(s);
        emit(o, j,
             "parity: " + std::to_string(p.parity) + "\nseifert matrix:\n" + matrix_text(p.L) +
                 "intersection form:\n" + matrix_text(s));
    } else if (cmd == "signature") {
        Json j;
        std::string text;
        if (o.matrix_file.empty()) {
            const ExponentMultiset e = ExponentMultiset::parse(o.exponents);
            const long sig = lattice_signature(e);
            j = Json{{"exponents", to_json(e)}, {"signature", sig}};
            text = "signature: " + std::to_string(sig) + "\n";
        }
        if (o.exact || !o.matrix_file.empty()) {
            const SeifertPresentation p = presentation(o);
            const long exact = signature_symmetric(p.L + p.L.transpose());
            j["exact_signature"] = exact;
            text += "exact signature: " + std::to_string(exact) + "\n";
        }
        emit(o, j, text);
    } else if (cmd == "equivariant") {
        const auto eq = equivariant_signatures(ExponentMultiset::parse(o.exponents));
        Json a = Json::array();
        for (auto it = eq.rbegin(); it != eq.rend(); ++it) a.push_back(Json::array({it->first, it->second}));
        emit(o, a, equivariant_string(eq) + "\n");
    } else if (cmd == "jump") {
        const JumpReport r = jump_report(ExponentMultiset::parse(o.exponents), o.rs);
        std::string text;
        for (const auto& [x, v] : r.values) text += std::to_string(x) + "/" + std::to_string(r.P) + " " + std::to_string(v) + "\n";
        emit(o, to_json(r), text);
    } else if (cmd == "suspend") {
        const SeifertPresentation p = presentation(o);
        check_dim(o, mpz_class(static_cast<unsigned long>(p.L.rows())) * (o.by > 0 ? o.by - 1 : 0));
        const SeifertPresentation q = suspend(p, o.by);
        emit(o, to_json(q), "parity: " + std::to_string(q.parity) + "\nseifert matrix:\n" + matrix_text(q.L));
    } else if (cmd == "decompose") {
        Json a = Json::array();
        std::string text;
        if (o.tensor) {
            const ExponentMultiset e = ExponentMultiset::parse(o.exponents);
            check_dim(o, e.milnor_number());
            for (const TensorBlock& b : tensor_block_decomposition(e)) {
                const auto f = factor_cyclotomic(b.char_poly);
                const std::string cp = f ? f->to_string() : b.char_poly.to_string();
                Json orders = Json::array();
                std::string os;
                for (unsigned long m : b.orders) {
                    orders.push_back(m);
                    os += (os.empty() ? "" : ",") + std::to_string(m);
                }
                a.push_back(Json{{"orders", orders}, {"rank", b.form.rows()}, {"char_poly", cp}, {"form", to_json(b.form)}});
                text += "orders " + os + ": rank " + std::to_string(b.form.rows()) + ", char " + cp + "\n";
            }
        } else {
            for (const PrimaryComponent& c : primary_decomposition(presentation(o))) {
                const long sig = signature_symmetric(c.form + c.form.transpose());
                const mpq_class det = determinant(c.form);
                a.push_back(Json{{"m", c.m},
                                 {"multiplicity", c.multiplicity},
                                 {"rank", c.form.rows()},
                                 {"signature", sig},
                                 {"determinant", rational_json(det)},
                                 {"form", to_json(c.form)}});
                text += "phi" + std::to_string(c.m) + (c.multiplicity > 1 ? "^" + std::to_string(c.multiplicity) : "") + ": rank " +
                        std::to_string(c.form.rows()) + ", signature " + std::to_string(sig) + ", det " +
                        det.get_str() + "\n";
            }
        }
        emit(o, a, text);
    } else if (cmd == "metabolizer") {
        const SeifertPresentation p = presentation(o);
        const auto w = search_metabolizer(p.L, o.height_bound);
        Json j{{"found", w.has_value()}, {"height_bound", o.height_bound}};
        std::string text;
        if (w) {
            Json basis = Json::array();
            for (const auto& v : w->basis) {
                Json col = Json::array();
                std::string line;
                for (const auto& x : v) {
                    col.push_back(rational_json(x));
                    line += (line.empty() ? "" : " ") + x.get_str();
                }
                basis.push_back(col);
                text += line + "\n";
            }
            const bool ok = verify_metabolizer(p.L, *w);
            j["basis"] = basis;
            j["verified"] = ok;
            text = "metabolizer" + std::string(ok ? " (verified)" : " (verification failed)") + ":\n" + text;
            emit(o, j, text);
            return ok ? 0 : kMismatch;
        }
        emit(o, j, "no metabolizer found up to height " + std::to_string(o.height_bound) + "\n");
    } else if (cmd == "family") {
        const auto fam = parse_family(o.exponents);
        const bool good = is_good_family(fam);
        if (!good) {
            emit(o, Json{{"good", false}}, "not a good family\n");
            return 0;
        }
        const IndependenceCertificate c = independence_certificate(fam);
        Json j = to_json(c);
        j["good"] = true;
        std::string text = std::string("good family, certificate ") + (c.valid ? "valid" : "invalid") +
                           ", M = " + c.M().get_str() + "\n";
        for (const auto& s : c.chain) {
            text += "  " + c.family[s.member].to_string() + " jumps by " + std::to_string(s.value) + " at 1/" +
                    s.M.get_str();
            for (const auto& [idx, v] : s.others) text += "; " + c.family[idx].to_string() + ": " + std::to_string(v);
            text += "\n";
        }
        emit(o, j, text);
    } else if (cmd == "reproduce-paper") {
        const auto rows = reproduce(o.only);
        emit(o, to_json(rows), to_text(rows));
        for (const auto& r : rows)
            if (!r.pass) return kMismatch;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of Brieskorn algebraic knots"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--max-dim", o.max_dim, "refuse matrices larger than this")->capture_default_str();

    auto exps = [&](CLI::App* s) { s->add_option("exponents", o.exponents, "e.g. 3,4,4,6,9")->required(); };
    auto matrix = [&](CLI::App* s) {
        s->add_option("exponents", o.exponents, "e.g. 3,4,4");
        s->add_option("--matrix-file", o.matrix_file, "Seifert matrix JSON");
        s->add_option("--parity", o.parity, "even (+1) or odd (-1); overrides the input");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one exponent list");
    exps(analyze_cmd);
    analyze_cmd->add_option("--n", o.n, "dimension override");
    auto* compare_cmd = app.add_subcommand("compare", "Fox-Milnor and signature obstructions for two lists");
    compare_cmd->add_option("first", o.exponents)->required();
    compare_cmd->add_option("second", o.second)->required();
    exps(app.add_subcommand("divisor", "Alexander divisor"));
    exps(app.add_subcommand("essential-set", "essential exponent set"));
    auto* sph = app.add_subcommand("spherical", "graph criterion");
    exps(sph);
    sph->add_option("--n", o.n, "dimension override");
    matrix(app.add_subcommand("seifert", "Seifert matrix and intersection form"));
    auto* sig = app.add_subcommand("signature", "signature of L + L^T");
    matrix(sig);
    sig->add_flag("--exact", o.exact, "also run the exact pivot");
    exps(app.add_subcommand("equivariant", "signature per cyclotomic factor"));
    auto* jmp = app.add_subcommand("jump", "signature jump function");
    exps(jmp);
    jmp->add_option("-r", o.rs, "only these r");
    auto* sus = app.add_subcommand("suspend", "cyclic suspension");
    matrix(sus);
    sus->add_option("--by", o.by, "suspension order d")->required();
    auto* dec = app.add_subcommand("decompose", "primary decomposition");
    matrix(dec);
    dec->add_flag("--tensor", o.tensor, "tensor blocks of a Brieskorn matrix instead");
    auto* met = app.add_subcommand("metabolizer", "bounded metabolizer search");
    matrix(met);
    met->add_option("--height-bound", o.height_bound, "coefficient bound")->capture_default_str();
    auto* fam = app.add_subcommand("family", "good family check and independence certificate");
    fam->add_option("family", o.exponents, "e.g. '2,3,5;2,3,7'")->required();
    auto* rep = app.add_subcommand("reproduce-paper", "run the reproduction table");
    rep->add_option("--only", o.only, "tag: section3, section4, section5 or criterion<k>");

    for (auto* s : app.get_subcommands({})) {
        s->add_flag("--json", o.json, "JSON output");
        s->add_option("--max-dim", o.max_dim, "refuse matrices larger than this");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
}
