#pragma once

#include "tmoments/oracle.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tmoments::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,         // bad flags or parameters outside a domain
    kIo = 3,            // output could not be written
    kVerification = 4,  // verification ran and found a failure
};

enum class Format { plain, csv, json };
enum class DistKind { student, folded, truncated };

struct MomentsArgs {
    DistKind dist = DistKind::folded;
    double mu = 0.0;
    double nu = 0.0;
    double sigma = 1.0;
    std::optional<double> lower;
    Format format = Format::plain;
};

/// Parameter sweep over mu at fixed nu (mean against location, with the
/// distance to the diagonal mean = mu).
struct SweepSpec {
    DistKind dist = DistKind::folded;
    double nu = 2.0;
    double mu_min = -5.0;
    double mu_max = 10.0;
    int steps = 301;
    double sigma = 1.0;

    void validate() const;
};

struct SweepRow {
    double mu = 0.0;
    double mean = 0.0;
    std::optional<double> variance;
    double diag_gap = 0.0;
};

struct VerifyArgs {
    double mu_min = -10.0;
    double mu_max = 10.0;
    double mu_step = 0.5;
    std::vector<double> nu_list{2.5, 3.0, 5.0, 10.0, 30.0};
    std::vector<Quantity> quantities{std::begin(kAllQuantities), std::end(kAllQuantities)};
    double tol = 1e-8;
    std::size_t mc_samples = 1'000'000;
    std::uint64_t seed = 42;
    unsigned threads = 0;
    Format format = Format::plain;
};

struct SampleArgs {
    DistKind dist = DistKind::student;
    double mu = 0.0;
    double nu = 1.0;
    double sigma = 1.0;
    std::optional<double> lower;
    std::size_t n = 10;
    std::uint64_t seed = 42;
};

int run_moments(const MomentsArgs& args, std::ostream& out, std::ostream& err);

/// Writes the sweep CSV to `out_path` ("-" for `out`). Header is exactly
/// `mu,mean,variance,diag_gap`, LF line endings, 12 significant digits.
int run_sweep(const SweepSpec& spec, const std::string& out_path, bool ascii_plot,
              std::ostream& out, std::ostream& err);

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

int run_sample(const SampleArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Building blocks, exposed for tests and the Python module.
std::vector<SweepRow> sweep_rows(const SweepSpec& spec);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string ascii_plot(const std::vector<SweepRow>& rows, int width = 60, int height = 20);
std::vector<double> mu_grid(double mu_min, double mu_max, double step);
void render_report(std::ostream& os, const VerificationReport& report, Format format);

}  // namespace tmoments::cli
