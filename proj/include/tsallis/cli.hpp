#pragma once

#include "tsallis/search.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tsallis::cli {

enum class Mode { Diagonal, Full, OneD };
enum class ReportFormat { Text, Csv };

inline constexpr const char* kReportHeader = "image,q,mode,t_star,s_star,criterion,millis";

struct RunConfig {
    std::vector<std::string> inputs;
    std::vector<double> qs = {0.1};
    Mode mode = Mode::Diagonal;
    std::string out_dir = ".";
    bool dump_surface = false;
    bool dump_histogram = false;
    ReportFormat format = ReportFormat::Csv;
    // Optional CSV copy of the report.
    std::string report_path;
    bool write_images = true;
    unsigned jobs = 1;
};

// One report row. `status` is empty on success, otherwise "degenerate" or
// "error" and the threshold fields are unset.
struct ReportRow {
    std::string image;
    double q = 0.0;
    Mode mode = Mode::Diagonal;
    std::string status;
    int t_star = -1;
    int s_star = -1;
    double criterion = 0.0;
    long long millis = 0;
};

std::string mode_name(Mode mode);
// Shortest decimal that round-trips (0.1 -> "0.1", 1 -> "1").
std::string format_number(double v);

std::string format_csv_row(const ReportRow& row);

// File name stem used for every artifact of `input`.
std::string artifact_stem(const std::string& input);
std::string binarized_name(const std::string& stem, double q, int t_star);

// Lines "i,j,count,p" for nonzero cells, sorted by (i, j), after a header.
std::string histogram_csv(const JointHistogram& hist);
// Lines "t,s,value" row-major, "-inf" for invalid pairs, after a header.
std::string surface_csv(const CriterionSurface& surface);

// Processes every (image, q). Returns 0 on success, 1 if any image failed
// to decode or had a degenerate histogram, 2 on invalid configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
std::vector<ReportRow> process(const RunConfig& config, std::ostream& err);

// Full command line, including the `gen` subcommand. args excludes argv[0].
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tsallis::cli
