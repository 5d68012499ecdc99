#include "e6cs/cli.hpp"

#include "e6cs/e6cs.hpp"
#include "e6cs/verify.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>

namespace e6cs::cli {

namespace {

void print_series(std::ostream& out, const CGSeries& s, bool json)
{
    if (json) {
        out << series_to_json(s) << '\n';
        return;
    }
    for (const auto& t : s.terms)
        out << '(' << format_weight(t.weight) << ")×" << t.mult << '\n';
}

std::shared_ptr<const CharacterCache> open_cache(bool disabled)
{
    if (disabled)
        return nullptr;
    return std::make_shared<const CharacterCache>(default_cache_dir());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact E6 characters and Clebsch-Gordan series", "e6cs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "Keep characters in memory only");

    std::string weight_a, weight_b, method = "recursion", format = "text", kappa = "1", expr, suite = "all";
    bool json = false;

    auto* c_char = app.add_subcommand("char", "Irreducible character as a polynomial in z1..z6");
    c_char->add_option("weight", weight_a, "Dynkin labels, e.g. 2,0,0,0,0,0")->required();
    c_char->add_option("--method", method, "Computation method")
        ->check(CLI::IsMember({"recursion", "annihilator"}));
    c_char->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* c_dim = app.add_subcommand("dim", "Weyl dimension");
    c_dim->add_option("weight", weight_a)->required();

    auto* c_eig = app.add_subcommand("eig", "Operator eigenvalue");
    c_eig->add_option("weight", weight_a)->required();
    c_eig->add_option("--kappa", kappa, "Coupling as p/q");

    auto* c_tensor = app.add_subcommand("tensor", "Clebsch-Gordan series of a product of two irreducibles");
    c_tensor->add_option("first", weight_a)->required();
    c_tensor->add_option("second", weight_b)->required();
    c_tensor->add_flag("--json", json);

    auto* c_mono = app.add_subcommand("monomial", "Series of the monomial z1^n1 ... z6^n6");
    c_mono->add_option("exponent", weight_a)->required();
    c_mono->add_flag("--json", json);

    auto* c_delta = app.add_subcommand("delta", "Apply the operator to a polynomial expression");
    c_delta->add_option("expression", expr)->required();

    auto* c_verify = app.add_subcommand("verify", "Run the built-in verification suites");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    c_verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
    bool raw = false;
    c_verify->add_flag("--no-errata", raw, "Compare against the golden data exactly as printed");

    auto* c_cache = app.add_subcommand("cache", "Inspect or clear the character cache");
    std::string action;
    c_cache->add_option("action", action)->required()->check(CLI::IsMember({"path", "list", "clear"}));

    std::vector<const char*> argv{"e6cs"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "e6cs: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (c_dim->parsed()) {
            out << weyl_dimension(parse_weight(weight_a)).get_str() << '\n';
            return kOk;
        }
        if (c_eig->parsed()) {
            Weight m = parse_weight(weight_a);
            out << to_string(eigenvalue(m, parse_rational(kappa))) << '\n';
            return kOk;
        }
        if (c_delta->parsed()) {
            out << to_string(apply_delta(parse_polynomial(expr))) << '\n';
            return kOk;
        }
        if (c_cache->parsed()) {
            CharacterCache cache(default_cache_dir());
            if (action == "path") {
                out << cache.dir().string() << '\n';
            } else if (action == "list") {
                for (const auto& w : cache.list())
                    out << format_weight(w) << '\n';
            } else {
                out << "removed " << cache.clear() << " entries\n";
            }
            return kOk;
        }

        // Validate arguments before any computation, so syntax errors are
        // always usage errors.
        std::optional<Weight> wa, wb;
        if (c_char->parsed() || c_tensor->parsed())
            wa = parse_weight(weight_a);
        if (c_tensor->parsed())
            wb = parse_weight(weight_b);
        if (c_mono->parsed())
            wa = parse_weight(weight_a);

        CharacterEngine engine(open_cache(no_cache), parse_method(method));
        if (c_char->parsed()) {
            auto c = engine.character(*wa);
            if (format == "json")
                out << character_to_json(*c) << '\n';
            else
                out << to_string(c->poly) << '\n';
            return kOk;
        }
        if (c_tensor->parsed()) {
            print_series(out, tensor_decompose(*wa, *wb, engine), json);
            return kOk;
        }
        if (c_mono->parsed()) {
            print_series(out, monomial_decompose(*wa, engine), json);
            return kOk;
        }
        if (c_verify->parsed()) {
            std::vector<std::string> todo = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            for (const auto& name : todo) {
                auto r = verify::run_suite(name, engine, !raw);
                verify::print(out, r);
                ok = ok && r.passed();
            }
            return ok ? kOk : kFailure;
        }
    } catch (const ParseError& e) {
        err << "e6cs: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "e6cs: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace e6cs::cli
