#include "rackhom/cli.hpp"

#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/products.hpp"
#include "rackhom/serialize.hpp"
#include "rackhom/split.hpp"
#include "rackhom/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace rackhom {

namespace {

std::vector<int> parse_permutation(const std::string& s)
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw InputError("--permutation expects comma-separated integers, got \"" + s + "\"");
        }
    }
    return out;
}

// Either a shelf or the raw table with its axiom witness (only from files).
std::variant<FiniteShelf, std::pair<OpTable, ShelfAxiomFailure>> load_shelf(const RunConfig& c)
{
    int sources = c.shelf_file.has_value() + c.dihedral.has_value() + c.trivial.has_value() + c.permutation.has_value();
    if (sources != 1)
        throw InputError("give exactly one of --shelf, --dihedral, --trivial, --permutation");
    if (c.dihedral)
        return builtin::dihedral(*c.dihedral);
    if (c.trivial)
        return builtin::trivial(*c.trivial);
    if (c.permutation)
        return builtin::permutation(parse_permutation(*c.permutation));
    OpTable table = table_from_json(parse_json_file(*c.shelf_file));
    auto result = classify(table);
    if (auto* failure = std::get_if<ShelfAxiomFailure>(&result))
        return std::make_pair(table, *failure);
    return std::get<FiniteShelf>(std::move(result));
}

FiniteShelf require_shelf(const RunConfig& c)
{
    auto loaded = load_shelf(c);
    if (auto* bad = std::get_if<std::pair<OpTable, ShelfAxiomFailure>>(&loaded)) {
        const auto& w = bad->second.witness;
        throw InputError("not a shelf: self-distributivity fails at (" + std::to_string(w[0]) + "," +
                         std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
    }
    return std::get<FiniteShelf>(std::move(loaded));
}

Json witness_json(const std::array<int, 3>& w, int lhs, int rhs, const char* first)
{
    return Json{{first, w[0]}, {"y", w[1]}, {"z", w[2]}, {"lhs", lhs}, {"rhs", rhs}};
}

// nullopt with a witness report when the X-set file fails the axiom.
std::variant<CoefficientSystem, Json> load_coeff(const RunConfig& c, const FiniteShelf& shelf)
{
    if (c.coeff == "trivial")
        return CoefficientSystem::trivial();
    if (c.coeff == "self")
        return CoefficientSystem::self(shelf);
    if (c.coeff != "xset")
        throw InputError("--coeff must be trivial, self or xset FILE");
    if (!c.xset_file)
        throw InputError("--coeff xset needs a FILE");
    auto result = validate_xset(shelf, action_from_json(parse_json_file(*c.xset_file)));
    if (auto* failure = std::get_if<XSetAxiomFailure>(&result))
        return witness_json(failure->witness, failure->lhs, failure->rhs, "s");
    return CoefficientSystem::xset(std::get<XSetAction>(std::move(result)));
}

CoefficientSystem require_coeff(const RunConfig& c, const FiniteShelf& shelf)
{
    auto loaded = load_coeff(c, shelf);
    if (auto* bad = std::get_if<Json>(&loaded))
        throw InputError("X-set axiom fails at " + bad->dump());
    return std::get<CoefficientSystem>(std::move(loaded));
}

Json modulus_json(const RunConfig& c) { return c.modulus ? Json(*c.modulus) : Json(nullptr); }

// Plain-text rendering of the JSON report.
void render_text(const Json& j, std::ostream& out, int indent = 0)
{
    const std::string pad(indent, ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const Json& v) {
        if (!v.is_array())
            return !v.is_object();
        for (const auto& e : v)
            if (e.is_object() || e.is_array())
                return e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); });
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (flat(v) && !v.is_object()) {
                out << pad << k << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
            } else {
                out << pad << k << ":\n";
                render_text(v, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                out << pad << "-\n";
                render_text(v, out, indent + 2);
            } else {
                out << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

void emit(const RunConfig& c, const Json& report, std::ostream& out)
{
    if (c.format == "json")
        out << report.dump(2) << "\n";
    else
        render_text(report, out);
}

int cmd_validate(const RunConfig& c, std::ostream& out)
{
    auto loaded = load_shelf(c);
    Json report{{"command", "validate"}};
    if (auto* bad = std::get_if<std::pair<OpTable, ShelfAxiomFailure>>(&loaded)) {
        report["table"] = bad->first;
        report["class"] = Json{{"is_shelf", false}, {"is_rack", false}, {"is_spindle", false}, {"is_quandle", false}};
        report["witness"] = witness_json(bad->second.witness, bad->second.lhs, bad->second.rhs, "x");
        emit(c, report, out);
        return kMathFailure;
    }
    const FiniteShelf& shelf = std::get<FiniteShelf>(loaded);
    const auto& f = shelf.flags();
    report["shelf"] = shelf_to_json(shelf);
    report["class"] =
        Json{{"is_shelf", f.is_shelf}, {"is_rack", f.is_rack}, {"is_spindle", f.is_spindle}, {"is_quandle", f.is_quandle}};
    if (shelf.is_rack())
        report["orbits"] = orbits(shelf);
    int status = kOk;
    if (c.coeff == "xset") {
        auto coeff = load_coeff(c, shelf);
        if (auto* bad = std::get_if<Json>(&coeff)) {
            report["xset"] = Json{{"valid", false}, {"witness", *bad}};
            status = kMathFailure;
        } else {
            report["xset"] = Json{{"valid", true}, {"size", std::get<CoefficientSystem>(coeff).size()}};
        }
    }
    emit(c, report, out);
    return status;
}

int cmd_homology(const RunConfig& c, std::ostream& out, bool dual)
{
    FiniteShelf shelf = require_shelf(c);
    CoefficientSystem coeff = require_coeff(c, shelf);
    auto groups = homology_table(shelf, coeff, c.max_degree, dual, c.modulus);
    Json list = Json::array();
    for (std::size_t n = 0; n < groups.size(); ++n)
        list.push_back(homology_to_json(static_cast<int>(n), groups[n]));
    Json report{{"command", dual ? "cohomology" : "homology"},
                {"shelf", shelf_to_json(shelf)},
                {"coeff", coeff.name()},
                {"modulus", modulus_json(c)},
                {"groups", list}};
    emit(c, report, out);
    return kOk;
}

int cmd_cup(const RunConfig& c, std::ostream& out)
{
    FiniteShelf shelf = require_shelf(c);
    CoefficientSystem coeff = require_coeff(c, shelf);
    if (!c.f_file || !c.g_file)
        throw InputError("cup needs --f FILE and --g FILE");
    Cochain f = cochain_from_json(parse_json_file(*c.f_file), shelf.size(), coeff.size());
    Cochain g = cochain_from_json(parse_json_file(*c.g_file), shelf.size(), coeff.size());
    if (c.modulus) {
        f = f.reduced(*c.modulus);
        g = g.reduced(*c.modulus);
    }
    Cochain result;
    if (c.half.empty())
        result = cup(shelf, coeff, f, g);
    else if (c.half == "left" || c.half == "right") {
        if (!coeff.is_trivial())
            throw Unsupported("half cups need trivial coefficients");
        result = half_cup(shelf, f, g, c.half == "left" ? Side::left : Side::right);
    } else
        throw InputError("--half must be left or right");
    Json report{{"command", "cup"},
                {"product", c.half.empty() ? "cup" : c.half},
                {"modulus", modulus_json(c)},
                {"result", cochain_to_json(result)}};
    emit(c, report, out);
    return kOk;
}

int cmd_decompose(const RunConfig& c, std::ostream& out)
{
    FiniteShelf shelf = require_shelf(c);
    if (!shelf.is_spindle())
        throw Unsupported("decompose needs a spindle (x<x = x)");
    bool ok = true;
    Json report{{"command", "decompose"}, {"shelf", shelf_to_json(shelf)}, {"modulus", modulus_json(c)}};
    for (bool dual : {false, true}) {
        std::map<SplitPart, std::vector<HomologyGroup>> h;
        for (auto part : {SplitPart::rack, SplitPart::quandle, SplitPart::degenerate, SplitPart::late})
            h[part] = split_homology(shelf, part, c.max_degree, dual, c.modulus);
        Json rows = Json::array();
        for (int n = 0; n <= c.max_degree; ++n) {
            Json row{{"degree", n}};
            for (auto part : {SplitPart::rack, SplitPart::quandle, SplitPart::degenerate, SplitPart::late})
                row[to_string(part)] = h[part][n].to_string();
            bool a = h[SplitPart::rack][n] == direct_sum(h[SplitPart::quandle][n], h[SplitPart::degenerate][n]);
            row["rack_is_quandle_plus_degenerate"] = a;
            ok = ok && a;
            if (n >= 2) {
                bool b = h[SplitPart::degenerate][n] == direct_sum(h[SplitPart::late][n], h[SplitPart::quandle][n - 1]);
                row["degenerate_is_late_plus_shifted_quandle"] = b;
                ok = ok && b;
            }
            rows.push_back(row);
        }
        report[dual ? "cohomology" : "homology"] = rows;
    }
    report["passed"] = ok;
    emit(c, report, out);
    return ok ? kOk : kMathFailure;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    FiniteShelf shelf = require_shelf(c);
    VerifyOptions o;
    o.max_degree = c.max_degree;
    o.modulus = c.modulus;
    if (c.coeff != "trivial")
        o.coeff = require_coeff(c, shelf);
    auto results = run_suite(shelf, c.suite, o);
    bool ok = true;
    Json suites = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        suites.push_back(to_json(r));
    }
    Json report{{"command", "verify"}, {"shelf", shelf_to_json(shelf)}, {"max_degree", c.max_degree},
                {"suites", suites}, {"passed", ok}};
    emit(c, report, out);
    return ok ? kOk : kMathFailure;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.max_degree < 0)
            throw InputError("--max-degree must be non-negative");
        if (c.modulus && !is_prime(*c.modulus))
            throw InputError("--mod must be a prime");
        if (c.format != "json" && c.format != "text")
            throw InputError("--format must be json or text");
        if (c.command == "validate")
            return cmd_validate(c, out);
        if (c.command == "homology" || c.command == "cohomology")
            return cmd_homology(c, out, c.command == "cohomology");
        if (c.command == "cup")
            return cmd_cup(c, out);
        if (c.command == "decompose")
            return cmd_decompose(c, out);
        if (c.command == "verify")
            return cmd_verify(c, out);
        throw InputError("unknown command \"" + c.command + "\"");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUsageError;
    } catch (const ResourceLimitExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kUsageError;
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << "\n";
        return kMathFailure;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"rack and quandle (co)homology toolkit", "rackhom"};
    app.require_subcommand(1);
    std::vector<std::string> coeff_spec;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--shelf", c.shelf_file, "shelf table JSON file");
        sub->add_option("--dihedral", c.dihedral, "dihedral quandle of order N");
        sub->add_option("--trivial", c.trivial, "trivial shelf of order N");
        sub->add_option("--permutation", c.permutation, "permutation rack, e.g. \"0,2,1\"");
        sub->add_option("--coeff", coeff_spec, "trivial | self | xset FILE")->expected(1, 2);
        sub->add_option("--mod", c.modulus, "prime modulus");
        sub->add_option("--max-degree", c.max_degree, "degree cap");
        sub->add_option("--format", c.format, "json | text");
    };
    for (const char* name : {"validate", "homology", "cohomology", "decompose"})
        common(app.add_subcommand(name));
    auto* cup_cmd = app.add_subcommand("cup", "evaluate a cup or half cup product of two cochain files");
    common(cup_cmd);
    cup_cmd->add_option("--f", c.f_file, "first cochain JSON file");
    cup_cmd->add_option("--g", c.g_file, "second cochain JSON file");
    cup_cmd->add_option("--half", c.half, "left | right");
    auto* verify_cmd = app.add_subcommand("verify", "run identity suites up to --max-degree");
    common(verify_cmd);
    verify_cmd->add_option("--suite", c.suite, "complex | dgb | homotopy | dendriform | cup | zinbiel | action | "
                                               "splitting | all");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (!coeff_spec.empty()) {
        c.coeff = coeff_spec[0];
        if (coeff_spec.size() == 2)
            c.xset_file = coeff_spec[1];
    }
    return run(c, out, err);
}

}  // namespace rackhom
