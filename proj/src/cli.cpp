#include "closedgeo/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "closedgeo/errors.hpp"
#include "closedgeo/io.hpp"

namespace closedgeo::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Structured };

IndexProfile load_profile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidProfile("cannot read profile file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return io::parse_profile(buf.str());
}

void emit_scalar(std::ostream& out, Format f, const std::string& name, const std::string& value)
{
    if (f == Format::Csv)
        out << name << '\n' << value << '\n';
    else
        out << json{{name, value}}.dump(2) << '\n';
}

struct Options {
    Format format = Format::Csv;
    std::string profile;
    int n = 0;
    int max_k = 0;
    std::int64_t max_m = 0;
    std::int64_t m = 0;
    std::int64_t horizon = 0;
    std::int64_t q = 0;
    unsigned threads = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Morse index iteration calculus for closed geodesics on spheres", "closedgeo"};
    app.require_subcommand(1);
    Options o;

    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"structured", Format::Structured}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format: csv or structured")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--profile", o.profile, "Profile document (JSON)")->required()->check(CLI::ExistingFile);
    };

    auto* betti = app.add_subcommand("betti", "Betti numbers of the loop-space quotient");
    betti->add_option("--n", o.n, "Sphere dimension")->required()->check(CLI::Range(3, 1000));
    betti->add_option("--max-k", o.max_k, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    add_format(betti);

    auto* iterate = app.add_subcommand("iterate", "Indices of iterates via Bott's formula");
    add_profile(iterate);
    iterate->add_option("--max-m", o.max_m, "Largest iterate")->required()->check(CLI::PositiveNumber);
    add_format(iterate);

    auto* alpha = app.add_subcommand("alpha", "Average index");
    add_profile(alpha);
    add_format(alpha);

    auto* gamma = app.add_subcommand("gamma", "Gamma invariant");
    add_profile(gamma);
    add_format(gamma);

    auto* gaps = app.add_subcommand("gaps", "A_m / B_m decomposition of ind(c^{m+1}) - ind(c^m)");
    add_profile(gaps);
    gaps->add_option("--m", o.m, "Iterate")->required()->check(CLI::PositiveNumber);
    add_format(gaps);

    auto* jumps = app.add_subcommand("jumps", "Common index jumps up to a horizon");
    add_profile(jumps);
    jumps->add_option("--horizon", o.horizon, "Largest k")->required()->check(CLI::PositiveNumber);
    add_format(jumps);

    auto* morse = app.add_subcommand("morse", "Critical-group counts and the Morse recursion");
    add_profile(morse);
    morse->add_option("--max-k", o.max_k, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    add_format(morse);

    auto* prop33 = app.add_subcommand("prop33", "Check the staircase proposition on a profile");
    add_profile(prop33);
    add_format(prop33);

    auto* verify = app.add_subcommand("verify", "Exhaustive single-geodesic contradiction search");
    verify->add_option("--n", o.n, "Sphere dimension (3..8)")->required()->check(CLI::Range(3, 8));
    verify->add_option("--horizon", o.horizon, "Largest iterate examined")->required()->check(CLI::PositiveNumber);
    verify->add_option("--q", o.q, "Prime phase denominator")->required()->check(CLI::PositiveNumber);
    verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    const bool csv = o.format == Format::Csv;
    try {
        if (betti->parsed()) {
            const auto table = poincare_coefficients(o.n, o.max_k);
            if (csv)
                out << io::betti_csv(table);
            else
                out << json{{"n", table.n}, {"max_degree", table.max_degree}, {"ranks", table.ranks}}.dump(2) << '\n';
        } else if (iterate->parsed()) {
            const auto p = load_profile(o.profile);
            const auto seq = index_sequence(p, o.max_m);
            if (csv) {
                out << io::index_csv(seq);
            } else {
                json rows = json::array();
                for (std::size_t i = 0; i < seq.size(); ++i)
                    rows.push_back({{"m", i + 1}, {"ind", seq[i]}});
                out << json{{"iterates", rows}}.dump(2) << '\n';
            }
        } else if (alpha->parsed()) {
            const auto a = average_index(load_profile(o.profile));
            err << "alpha ~ " << a.approx() << '\n';
            emit_scalar(out, o.format, "alpha", a.str());
        } else if (gamma->parsed()) {
            emit_scalar(out, o.format, "gamma", gamma_invariant(load_profile(o.profile)).value().str());
        } else if (gaps->parsed()) {
            const auto p = load_profile(o.profile);
            const auto g = gap_decomposition(p, o.m);
            const auto gap = bott_index(p, o.m + 1) - bott_index(p, o.m);
            if (csv) {
                out << "m,A_m,B_m,J_m,gap\n" << o.m << ',' << g.a << ',' << g.b << ',';
                if (!g.j_set.empty())
                    out << g.j_set.front();
                out << ',' << gap << '\n';
            } else {
                out << json{{"m", o.m}, {"A_m", g.a}, {"B_m", g.b}, {"J_m", g.j_set}, {"gap", gap}}.dump(2) << '\n';
            }
        } else if (jumps->parsed()) {
            const auto ks = jump_search(load_profile(o.profile), o.horizon);
            if (csv) {
                out << "k\n";
                for (auto k : ks)
                    out << k << '\n';
            } else {
                out << json{{"horizon", o.horizon}, {"k", ks}}.dump(2) << '\n';
            }
        } else if (morse->parsed()) {
            const auto p = load_profile(o.profile);
            if (p.n < 3)
                throw PrecondViolation("Morse report needs n >= 3");
            const auto report =
                morse_q_recursion(aggregate_w(p, o.max_k), betti_table(p.n, o.max_k).ranks);
            out << (csv ? io::morse_csv(report) : io::morse_to_json(report).dump(2) + "\n");
        } else if (prop33->parsed()) {
            const auto r = check_prop33(load_profile(o.profile));
            if (csv) {
                out << "clause,status\n";
                const bool met = r.status == Prop33Status::Checked;
                out << "hypotheses," << (met ? "met" : "not-met") << '\n';
                if (met) {
                    out << "a," << (r.conclusion_a() ? "pass" : "fail") << '\n';
                    out << "b," << (r.conclusion_b() ? "pass" : "fail") << '\n';
                    out << "c," << (r.conclusion_c() ? "pass" : "fail") << '\n';
                }
            } else {
                out << io::prop33_to_json(r).dump(2) << '\n';
            }
        } else if (verify->parsed()) {
            const auto summary = verify_theorem(o.n, o.horizon, o.q, o.threads);
            if (csv) {
                out << "step,count\n";
                for (const auto& [step, count] : summary.by_step)
                    out << to_string(step) << ',' << count << '\n';
                out << "survivors," << summary.survivors.size() << '\n';
            } else {
                out << io::summary_to_json(summary).dump(2) << '\n';
            }
            if (!summary.survivors.empty()) {
                err << "verify: " << summary.survivors.size() << " candidate(s) consistent up to the horizon\n";
                return exit_survivors;
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const PhaseCollision& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_ok;
}

}  // namespace closedgeo::cli
