#include "tmoments/cli.hpp"

#include "tmoments/error.hpp"
#include "tmoments/folded.hpp"
#include "tmoments/format.hpp"
#include "tmoments/truncated.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace tmoments::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

const std::map<std::string, DistKind> kDists{
    {"student", DistKind::student}, {"folded", DistKind::folded},
    {"truncated", DistKind::truncated}};

std::string_view dist_name(DistKind d)
{
    switch (d) {
    case DistKind::student: return "student";
    case DistKind::folded: return "folded";
    case DistKind::truncated: return "truncated";
    }
    return "?";
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace

void SweepSpec::validate() const
{
    if (!std::isfinite(mu_min) || !std::isfinite(mu_max) || !(mu_min < mu_max)) {
        throw DomainError("sweep: need finite mu_min < mu_max");
    }
    if (steps < 2) {
        throw DomainError("sweep: steps must be at least 2");
    }
    if (dist == DistKind::student) {
        throw DomainError("sweep: dist must be folded or truncated");
    }
    StudentParams{0.0, nu, sigma}.validate();
    require_moment(1, nu);
}

std::vector<SweepRow> sweep_rows(const SweepSpec& spec)
{
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.steps));
    const double span = static_cast<double>(spec.steps - 1);
    for (int i = 0; i < spec.steps; ++i) {
        // Convex combination keeps both endpoints (and mu = 0 on symmetric
        // grids) exact.
        const double w = static_cast<double>(i);
        const double mu = (spec.mu_min * (span - w) + spec.mu_max * w) / span;
        const StudentParams p{mu, spec.nu, spec.sigma};
        SweepRow row;
        row.mu = mu;
        if (spec.dist == DistKind::folded) {
            const FoldedT f{p};
            row.mean = mean_folded(f);
            if (spec.nu > 2.0) {
                row.variance = variance_folded(f);
            }
        } else {
            const TruncatedT t{p, 0.0};
            row.mean = mean_truncated(t);
            if (spec.nu > 2.0) {
                row.variance = variance_truncated(t);
            }
        }
        row.diag_gap = row.mean - mu;
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows)
{
    os << "mu,mean,variance,diag_gap\n";
    for (const auto& r : rows) {
        os << format_significant(r.mu) << ',' << format_significant(r.mean) << ','
           << (r.variance ? format_significant(*r.variance) : std::string{}) << ','
           << format_significant(r.diag_gap) << '\n';
    }
}

std::string ascii_plot(const std::vector<SweepRow>& rows, int width, int height)
{
    if (rows.empty() || width < 2 || height < 2) {
        return {};
    }
    const double x_min = rows.front().mu;
    const double x_max = rows.back().mu;
    double y_min = std::min(x_min, rows.front().mean);
    double y_max = std::max(x_max, rows.front().mean);
    for (const auto& r : rows) {
        y_min = std::min({y_min, r.mean, r.mu});
        y_max = std::max({y_max, r.mean, r.mu});
    }
    if (!(y_max > y_min)) {
        y_max = y_min + 1.0;
    }
    std::vector<std::string> canvas(static_cast<std::size_t>(height),
                                    std::string(static_cast<std::size_t>(width), ' '));
    auto row_of = [&](double y) {
        const double frac = (y - y_min) / (y_max - y_min);
        const int r = static_cast<int>(std::lround(frac * (height - 1)));
        return height - 1 - std::clamp(r, 0, height - 1);
    };
    for (int c = 0; c < width; ++c) {
        const double x = x_min + (x_max - x_min) * c / (width - 1);
        canvas[static_cast<std::size_t>(row_of(x))][static_cast<std::size_t>(c)] = '.';
    }
    for (const auto& r : rows) {
        const double frac = (r.mu - x_min) / (x_max - x_min);
        const int c = std::clamp(static_cast<int>(std::lround(frac * (width - 1))), 0, width - 1);
        canvas[static_cast<std::size_t>(row_of(r.mean))][static_cast<std::size_t>(c)] = '*';
    }
    std::ostringstream os;
    os << "mean vs mu  ('*' mean, '.' diagonal)\n";
    const std::string top = format_significant(y_max, 4);
    const std::string bottom = format_significant(y_min, 4);
    const std::size_t margin = std::max(top.size(), bottom.size());
    for (int r = 0; r < height; ++r) {
        std::string label = r == 0 ? top : (r == height - 1 ? bottom : std::string{});
        os << pad(label, margin) << " |" << canvas[static_cast<std::size_t>(r)] << '\n';
    }
    os << std::string(margin + 1, ' ') << '+' << std::string(static_cast<std::size_t>(width), '-')
       << '\n';
    const std::string left = format_significant(x_min, 4);
    const std::string right = format_significant(x_max, 4);
    os << std::string(margin + 2, ' ') << left
       << pad(right, static_cast<std::size_t>(width) - std::min<std::size_t>(left.size(), width))
       << '\n';
    return os.str();
}

std::vector<double> mu_grid(double mu_min, double mu_max, double step)
{
    if (!std::isfinite(mu_min) || !std::isfinite(mu_max) || !(step > 0.0) || mu_max < mu_min) {
        throw DomainError("mu grid: need mu_min <= mu_max and a positive step");
    }
    const auto count = static_cast<std::size_t>(std::floor((mu_max - mu_min) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(mu_min + static_cast<double>(i) * step);
    }
    return grid;
}

int run_moments(const MomentsArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.dist == DistKind::student) {
        err << "error: moments: --dist must be folded or truncated\n";
        return kUsage;
    }
    if (args.lower && args.dist != DistKind::truncated) {
        err << "error: moments: --lower is only valid with --dist truncated\n";
        return kUsage;
    }
    const StudentParams p{args.mu, args.nu, args.sigma};
    try {
        p.validate();
    } catch (const DomainError& e) {
        err << "error: moments: " << e.what() << '\n';
        return kUsage;
    }
    if (!(args.nu > 1.0)) {
        err << "error: moments: the mean requires nu > 1, got nu = "
            << format_roundtrip(args.nu) << '\n';
        return kUsage;
    }

    double mean = 0.0;
    std::optional<Moments> full;
    try {
        if (args.dist == DistKind::folded) {
            const FoldedT f{p};
            mean = mean_folded(f);
            if (args.nu > 2.0) {
                full = moments_folded(f);
            }
        } else {
            const TruncatedT t{p, args.lower.value_or(0.0)};
            mean = mean_truncated(t);
            if (args.nu > 2.0) {
                full = moments_truncated(t);
            }
        }
    } catch (const DomainError& e) {
        err << "error: moments: " << e.what() << '\n';
        return kUsage;
    }
    const std::string note = "second moment and variance require nu > 2";

    switch (args.format) {
    case Format::plain:
        out << "mean=" << format_significant(mean) << '\n';
        if (full) {
            out << "second_raw=" << format_significant(full->second_raw) << '\n';
            out << "variance=" << format_significant(full->variance) << '\n';
        } else {
            out << "note=" << note << '\n';
        }
        break;
    case Format::csv:
        out << "mean,second_raw,variance\n" << format_significant(mean) << ',';
        if (full) {
            out << format_significant(full->second_raw) << ',' << format_significant(full->variance);
        } else {
            out << ',';
        }
        out << '\n';
        break;
    case Format::json: {
        json j;
        j["dist"] = dist_name(args.dist);
        j["mu"] = args.mu;
        j["nu"] = args.nu;
        j["sigma"] = args.sigma;
        if (args.dist == DistKind::truncated) {
            j["lower"] = args.lower.value_or(0.0);
        }
        j["mean"] = mean;
        if (full) {
            j["second_raw"] = full->second_raw;
            j["variance"] = full->variance;
        } else {
            j["second_raw"] = nullptr;
            j["variance"] = nullptr;
            j["note"] = note;
        }
        out << j.dump() << '\n';
        break;
    }
    }
    return kOk;
}

int run_sweep(const SweepSpec& spec, const std::string& out_path, bool plot, std::ostream& out,
              std::ostream& err)
{
    std::vector<SweepRow> rows;
    try {
        rows = sweep_rows(spec);
    } catch (const DomainError& e) {
        err << "error: sweep: " << e.what() << '\n';
        return kUsage;
    }
    if (out_path.empty() || out_path == "-") {
        write_sweep_csv(out, rows);
        if (plot) {
            err << ascii_plot(rows);
        }
        return kOk;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: sweep: cannot open '" << out_path << "' for writing\n";
        return kIo;
    }
    write_sweep_csv(file, rows);
    file.flush();
    if (!file) {
        err << "error: sweep: write to '" << out_path << "' failed\n";
        return kIo;
    }
    if (plot) {
        out << ascii_plot(rows);
    }
    return kOk;
}

void render_report(std::ostream& os, const VerificationReport& report, Format format)
{
    const std::size_t evaluated = report.entries.size() - report.skipped();
    auto summary = [&]() {
        std::ostringstream s;
        if (report.overall_pass) {
            s << "PASS " << evaluated << '/' << evaluated;
        } else {
            s << "FAIL " << report.failed() << '/' << evaluated;
        }
        return s.str();
    };

    switch (format) {
    case Format::plain: {
        os << pad("mu", 6) << pad("nu", 6) << "  " << std::string("quantity    ") << pad("closed", 20)
           << pad("quadrature", 20) << pad("rel_err", 11) << pad("mc", 14) << pad("mc_se", 11)
           << "  verdict\n";
        for (const auto& e : report.entries) {
            std::string q(to_string(e.quantity));
            q.resize(12, ' ');
            os << pad(format_significant(e.mu, 4), 6) << pad(format_significant(e.nu, 4), 6) << "  "
               << q;
            if (e.verdict == Verdict::skipped) {
                os << "  (moment does not exist)";
            } else {
                os << pad(format_significant(e.closed_form, 15), 20)
                   << pad(format_significant(e.quadrature, 15), 20)
                   << pad(format_significant(e.rel_err, 3), 11)
                   << pad(format_significant(e.mc_estimate, 7), 14)
                   << pad(format_significant(e.mc_stderr, 3), 11);
                os << "  " << to_string(e.verdict);
                if (!e.mc_applicable) {
                    os << " (mc info only)";
                }
            }
            os << '\n';
        }
        if (report.skipped() > 0) {
            os << "skipped " << report.skipped() << '\n';
        }
        os << summary() << '\n';
        break;
    }
    case Format::csv:
        os << "mu,nu,quantity,closed_form,quadrature,mc_estimate,mc_stderr,rel_err,mc_applicable,"
              "verdict\n";
        for (const auto& e : report.entries) {
            auto cell = [&](double v) {
                return e.verdict == Verdict::skipped ? std::string{} : format_significant(v, 17);
            };
            os << format_significant(e.mu) << ',' << format_significant(e.nu) << ','
               << to_string(e.quantity) << ',' << cell(e.closed_form) << ',' << cell(e.quadrature)
               << ',' << cell(e.mc_estimate) << ',' << cell(e.mc_stderr) << ',' << cell(e.rel_err)
               << ',' << (e.mc_applicable ? "true" : "false") << ',' << to_string(e.verdict)
               << '\n';
        }
        break;
    case Format::json: {
        json entries = json::array();
        for (const auto& e : report.entries) {
            entries.push_back({
                {"mu", e.mu},
                {"nu", e.nu},
                {"quantity", to_string(e.quantity)},
                {"closed_form", number_or_null(e.closed_form)},
                {"quadrature", number_or_null(e.quadrature)},
                {"mc_estimate", number_or_null(e.mc_estimate)},
                {"mc_stderr", number_or_null(e.mc_stderr)},
                {"rel_err", number_or_null(e.rel_err)},
                {"mc_applicable", e.mc_applicable},
                {"pass", e.verdict != Verdict::fail},
                {"verdict", to_string(e.verdict)},
            });
        }
        json j{
            {"entries", entries},
            {"overall_pass", report.overall_pass},
            {"passed", report.passed()},
            {"failed", report.failed()},
            {"skipped", report.skipped()},
            {"summary", summary()},
        };
        os << j.dump(2) << '\n';
        break;
    }
    }
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    VerificationReport report;
    try {
        const auto grid = mu_grid(args.mu_min, args.mu_max, args.mu_step);
        QuadratureConfig qcfg;
        McConfig mcfg{args.mc_samples, args.seed};
        VerifyOptions options;
        options.threads = args.threads;
        report = verify_grid(grid, args.nu_list, args.quantities, qcfg, mcfg, args.tol, options);
    } catch (const DomainError& e) {
        err << "error: verify: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleError& e) {
        err << "error: verify: oracle failure: " << e.what() << '\n';
        return kVerification;
    }
    render_report(out, report, args.format);
    if (args.format == Format::csv) {
        const std::size_t evaluated = report.entries.size() - report.skipped();
        err << (report.overall_pass ? "PASS " : "FAIL ")
            << (report.overall_pass ? evaluated : report.failed()) << '/' << evaluated << '\n';
    }
    return report.overall_pass ? kOk : kVerification;
}

int run_sample(const SampleArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.lower && args.dist != DistKind::truncated) {
        err << "error: sample: --lower is only valid with --dist truncated\n";
        return kUsage;
    }
    std::vector<double> draws;
    try {
        const StudentParams p{args.mu, args.nu, args.sigma};
        switch (args.dist) {
        case DistKind::student: draws = sample(p, args.n, args.seed); break;
        case DistKind::folded: draws = sample_folded(FoldedT{p}, args.n, args.seed); break;
        case DistKind::truncated:
            draws = sample_truncated(TruncatedT{p, args.lower.value_or(0.0)}, args.n, args.seed);
            break;
        }
    } catch (const DomainError& e) {
        err << "error: sample: " << e.what() << '\n';
        return kUsage;
    }
    for (double x : draws) {
        out << format_roundtrip(x) << '\n';
    }
    return kOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Moments of folded and zero-truncated Student's t variates"};
    app.name("tmoments");
    app.require_subcommand(1);

    std::string format_name = "plain";
    std::string dist_str;

    // moments
    MomentsArgs margs;
    double m_lower = 0.0;
    auto* moments = app.add_subcommand("moments", "Closed-form mean, second moment and variance");
    moments->add_option("--dist", dist_str, "folded | truncated")
        ->required()
        ->check(CLI::IsMember({"folded", "truncated"}));
    moments->add_option("--mu", margs.mu, "Location")->required();
    moments->add_option("--nu", margs.nu, "Degrees of freedom")->required();
    moments->add_option("--sigma", margs.sigma, "Scale (default 1)");
    auto* m_lower_opt = moments->add_option("--lower", m_lower, "Truncation point (truncated only)");
    moments->add_option("--format", format_name, "plain | csv | json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    // sweep
    SweepSpec spec;
    std::string out_path = "-";
    bool plot = false;
    auto* sweep = app.add_subcommand("sweep", "Mean and variance across a range of mu, as CSV");
    sweep->add_option("--dist", dist_str, "folded | truncated")
        ->required()
        ->check(CLI::IsMember({"folded", "truncated"}));
    sweep->add_option("--nu", spec.nu, "Degrees of freedom (default 2)");
    sweep->add_option("--mu-min", spec.mu_min, "First mu (default -5)");
    sweep->add_option("--mu-max", spec.mu_max, "Last mu (default 10)");
    sweep->add_option("--steps", spec.steps, "Number of grid points (default 301)");
    sweep->add_option("--sigma", spec.sigma, "Scale (default 1)");
    sweep->add_option("--out", out_path, "Output CSV path, '-' for stdout");
    sweep->add_flag("--ascii-plot", plot, "Also draw a 60x20 character chart");

    // verify
    VerifyArgs vargs;
    std::vector<std::string> quantity_names;
    auto* verify = app.add_subcommand("verify", "Check closed forms against quadrature and Monte Carlo");
    verify->add_option("--mu-min", vargs.mu_min, "Default -10");
    verify->add_option("--mu-max", vargs.mu_max, "Default 10");
    verify->add_option("--mu-step", vargs.mu_step, "Default 0.5");
    verify->add_option("--nu-list", vargs.nu_list, "Comma-separated nu values")->delimiter(',');
    verify->add_option("--quantities", quantity_names,
                       "Comma-separated subset of folded-mean,folded-var,trunc-mean,"
                       "trunc-second,trunc-var")
        ->delimiter(',');
    verify->add_option("--tol", vargs.tol, "Relative tolerance against quadrature (default 1e-8)");
    verify->add_option("--mc-samples", vargs.mc_samples, "Monte Carlo draws per point (default 1e6)");
    verify->add_option("--seed", vargs.seed, "Monte Carlo seed (default 42)");
    verify->add_option("--threads", vargs.threads, "Worker threads, 0 = all cores");
    verify->add_option("--format", format_name, "plain | csv | json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    // sample
    SampleArgs sargs;
    double s_lower = 0.0;
    auto* sampler = app.add_subcommand("sample", "Seeded draws, one per line");
    sampler->add_option("--dist", dist_str, "student | folded | truncated")
        ->check(CLI::IsMember({"student", "folded", "truncated"}));
    sampler->add_option("--mu", sargs.mu, "Location");
    sampler->add_option("--nu", sargs.nu, "Degrees of freedom")->required();
    sampler->add_option("--sigma", sargs.sigma, "Scale (default 1)");
    auto* s_lower_opt = sampler->add_option("--lower", s_lower, "Truncation point (truncated only)");
    sampler->add_option("-n,--n", sargs.n, "Number of draws (default 10)");
    sampler->add_option("--seed", sargs.seed, "Seed (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const Format format = kFormats.at(format_name);
    if (moments->parsed()) {
        margs.dist = kDists.at(dist_str);
        margs.format = format;
        if (m_lower_opt->count() > 0) {
            margs.lower = m_lower;
        }
        return run_moments(margs, out, err);
    }
    if (sweep->parsed()) {
        spec.dist = kDists.at(dist_str);
        return run_sweep(spec, out_path, plot, out, err);
    }
    if (verify->parsed()) {
        vargs.format = format;
        if (!quantity_names.empty()) {
            vargs.quantities.clear();
            for (const auto& name : quantity_names) {
                const auto q = parse_quantity(name);
                if (!q) {
                    err << "error: verify: unknown quantity '" << name << "'\n";
                    return kUsage;
                }
                vargs.quantities.push_back(*q);
            }
        }
        return run_verify(vargs, out, err);
    }
    if (!dist_str.empty()) {
        sargs.dist = kDists.at(dist_str);
    }
    if (s_lower_opt->count() > 0) {
        sargs.lower = s_lower;
    }
    return run_sample(sargs, out, err);
}

}  // namespace tmoments::cli
