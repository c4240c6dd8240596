#include "lr/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <thread>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <ostream>

#include "lr/errors.hpp"
#include "lr/parallel.hpp"
#include "lr/polyfit.hpp"
#include "lr/properties.hpp"
#include "lr/report_io.hpp"
#include "lr/stretch.hpp"

namespace lr {

namespace {

struct Args {
    std::string lam, mu, nu, lamp, mup, nup;
    long nmax = -1, nstart = 0, window = 3, budget = -1;
    std::string format = "text";
    std::string threads_text;
    unsigned threads = 1;
    unsigned verify_extra = 2;

    void resolve_threads() {
        if (threads_text.empty()) return;
        if (threads_text == "auto") {
            threads = std::max(1u, std::thread::hardware_concurrency());
            return;
        }
        int parsed = std::atoi(threads_text.c_str());
        if (parsed < 1) throw parse_error("--threads wants a positive integer or 'auto'");
        threads = static_cast<unsigned>(parsed);
    }
};

Partition arg_partition(const std::string& text) { return parse_partition(text); }

void print_sequence(const std::vector<Int>& values, const std::string& format, std::ostream& out,
                    const char* header) {
    if (format == "json") {
        std::vector<std::pair<Int, Int>> pairs;
        for (std::size_t n = 0; n < values.size(); ++n) pairs.emplace_back(n, values[n]);
        out << sequence_json(pairs).dump() << "\n";
        return;
    }
    if (format == "csv") out << header << "\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << values[n] << "\n";
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Littlewood-Richardson counts, stretched sequences and their polynomials",
                 "lrstretch"};
    app.require_subcommand(1);

    Args a;
    if (const char* env = std::getenv("LR_THREADS")) a.threads_text = env;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--lam", a.lam, "outer partition");
        cmd->add_option("--mu", a.mu, "inner partition");
        cmd->add_option("--nu", a.nu, "content partition");
        cmd->add_option("--lamp", a.lamp, "outer offset partition");
        cmd->add_option("--mup", a.mup, "inner offset partition");
        cmd->add_option("--nup", a.nup, "content offset partition");
        cmd->add_option("--nmax", a.nmax, "largest n");
        cmd->add_option("--nstart", a.nstart, "first n of the fit window");
        cmd->add_option("--window", a.window, "plateau window length");
        cmd->add_option("--budget", a.budget, "largest n to try before giving up");
        cmd->add_option("--format", a.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--threads", a.threads_text,
                        "worker threads, a number or 'auto' (default $LR_THREADS or 1)");
        cmd->add_option("--verify-extra", a.verify_extra, "held-out samples for fits");
    };

    CLI::App* coef = app.add_subcommand("coef", "c(lam; mu, nu)");
    CLI::App* skew = app.add_subcommand("skew", "expansion of lam/mu into contents");
    CLI::App* tabs = app.add_subcommand("tabs", "stream the LR tableaux of lam/mu");
    CLI::App* qseq = app.add_subcommand("qseq", "Q(n): all fillings of the stretched shape");
    CLI::App* pseq = app.add_subcommand("pseq", "P(n): stretched coefficient sequence");
    CLI::App* bound = app.add_subcommand("bound", "stabilization bound and observed plateau");
    CLI::App* fit = app.add_subcommand("fit", "fit the (tail) polynomial of the sequence");
    CLI::App* gen = app.add_subcommand("gen", "generating function of the fitted polynomial");
    CLI::App* check = app.add_subcommand("check", "run the randomized property suites");
    for (CLI::App* cmd : {coef, skew, tabs, qseq, pseq, bound, fit, gen, check}) add_common(cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        a.resolve_threads();
        if (coef->parsed()) {
            Int c = lr_coefficient(arg_partition(a.lam), arg_partition(a.mu), arg_partition(a.nu));
            if (a.format == "json")
                out << json{{"c", c.get_str()}}.dump() << "\n";
            else if (a.format == "csv")
                out << "c\n" << c << "\n";
            else
                out << c << "\n";
        } else if (skew->parsed()) {
            auto expansion =
                skew_character(SkewDiagram(arg_partition(a.lam), arg_partition(a.mu)));
            if (a.format == "json")
                out << to_json(expansion).dump() << "\n";
            else {
                if (a.format == "csv") out << "nu,mult\n";
                for (const auto& [nu, mult] : expansion.terms())
                    out << (a.format == "csv" ? csv_quote(nu.to_string()) : nu.to_string()) << ","
                        << mult << "\n";
            }
        } else if (tabs->parsed()) {
            SkewDiagram shape(arg_partition(a.lam), arg_partition(a.mu));
            std::optional<Partition> content;
            if (!a.nu.empty()) content = arg_partition(a.nu);
            long emitted = 0;
            enumerate(shape, content, [&](const LRTableau& t) {
                if (a.format == "json")
                    out << to_json(t).dump() << "\n";
                else
                    out << tableau_text(t) << "\n";
                ++emitted;
                return a.nmax < 0 || emitted < a.nmax;  // --nmax caps the stream
            });
        } else if (qseq->parsed() || pseq->parsed()) {
            if (a.nmax < 0) {
                err << "usage error: --nmax is required\n";
                return 2;
            }
            bool is_p = pseq->parsed();
            Partition lam = arg_partition(a.lam), mu = arg_partition(a.mu);
            Partition lamp = arg_partition(a.lamp), mup = arg_partition(a.mup);
            Partition nu = arg_partition(a.nu), nup = arg_partition(a.nup);
            auto values = indexed_parallel<Int>(0, a.nmax, a.threads, [&](long n) {
                auto t0 = std::chrono::steady_clock::now();
                Int v = is_p ? p_value(lam, mu, nu, lamp, mup, nup, n)
                             : q_value(lam, mu, lamp, mup, n);
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count();
                if (secs >= 1.0)
                    err << "# " << (is_p ? "P" : "Q") << "(" << n << ") done in " << secs << "s\n";
                return v;
            });
            print_sequence(values, a.format, out, "n,value");
        } else if (bound->parsed()) {
            StabilizationReport rep =
                empirical_m(arg_partition(a.lam), arg_partition(a.mu), arg_partition(a.lamp),
                            arg_partition(a.mup), a.window, a.budget);
            if (a.format == "json")
                out << to_json(rep).dump() << "\n";
            else {
                if (a.format == "csv") out << "key,value\n";
                out << "m_formula," << rep.m_formula << "\n";
                out << "m_empirical," << rep.m_empirical << "\n";
                for (const auto& [n, q] : rep.q_values) out << n << "," << q << "\n";
            }
        } else if (fit->parsed() || gen->parsed()) {
            if (a.nmax < 0) {
                err << "usage error: --nmax is required\n";
                return 2;
            }
            Partition lam = arg_partition(a.lam), mu = arg_partition(a.mu);
            Partition nu = arg_partition(a.nu);
            RationalPolynomial poly;
            if (a.lamp.empty() && a.mup.empty() && a.nup.empty() && a.nstart == 0) {
                poly = stretched_poly(lam, mu, nu, a.nmax, a.verify_extra, a.threads);
            } else {
                poly = generalized_poly(lam, mu, nu, arg_partition(a.lamp), arg_partition(a.mup),
                                        arg_partition(a.nup), a.nstart, a.nmax - a.nstart + 1,
                                        a.verify_extra, a.threads);
            }
            if (fit->parsed()) {
                if (a.format == "json")
                    out << to_json(poly).dump() << "\n";
                else if (a.format == "csv") {
                    out << "k,coeff\n";
                    for (std::size_t k = 0; k < poly.coefficients().size(); ++k)
                        out << k << "," << poly.coefficients()[k].get_str() << "\n";
                } else
                    out << poly.to_string() << "\n";
            } else {
                GeneratingFunction gf = generating_function(poly);
                if (a.format == "json")
                    out << to_json(gf).dump() << "\n";
                else if (a.format == "csv") {
                    out << "k,numerator\n";
                    for (std::size_t k = 0; k < gf.numerator.size(); ++k)
                        out << k << "," << gf.numerator[k] << "\n";
                    out << "denom_power," << gf.denom_power << "\n";
                } else {
                    out << "numerator:";
                    for (const auto& c : gf.numerator) out << " " << c;
                    out << "\ndenom_power: " << gf.denom_power << "\n";
                }
            }
        } else if (check->parsed()) {
            PropertyOptions opts;
            opts.log = &err;
            if (a.budget > 0) opts.cases = static_cast<int>(a.budget);
            PropertyResult res = run_property_suites(opts);
            out << (res.ok() ? "ok" : "FAILED") << " (" << res.suites_run.size() << " suites)\n";
            if (!res.ok()) return 1;
        }
        return 0;
    } catch (const parse_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const non_polynomial_window& e) {
        err << "non-polynomial window: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lr
