#include "tsallis/cli.hpp"

#include "tsallis/baseline1d.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/synthetic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace tsallis::cli {

std::string mode_name(Mode mode)
{
    switch (mode) {
    case Mode::Diagonal:
        return "diag";
    case Mode::Full:
        return "full";
    case Mode::OneD:
        return "1d";
    }
    return "?";
}

std::string format_number(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

namespace {

// %.17g keeps at least 12 significant digits for any value.
std::string format_full(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string format_csv_row(const ReportRow& row)
{
    std::ostringstream os;
    os << row.image << ',' << format_number(row.q) << ',' << mode_name(row.mode) << ',';
    if (!row.status.empty())
        os << row.status << ",,";
    else
        os << row.t_star << ',' << (row.s_star >= 0 ? std::to_string(row.s_star) : "") << ','
           << format_full(row.criterion);
    os << ',' << row.millis;
    return os.str();
}

std::string artifact_stem(const std::string& input)
{
    return fs::path(input).stem().string();
}

std::string binarized_name(const std::string& stem, double q, int t_star)
{
    return stem + ".q" + format_number(q) + ".t" + std::to_string(t_star) + ".pgm";
}

std::string histogram_csv(const JointHistogram& hist)
{
    std::string out = "i,j,count,p\n";
    for (int i = 0; i < JointHistogram::kLevels; ++i)
        for (int j = 0; j < JointHistogram::kLevels; ++j)
            if (hist.count(i, j) != 0)
                out += std::to_string(i) + ',' + std::to_string(j) + ',' + std::to_string(hist.count(i, j)) + ',' +
                       format_full(hist.p(i, j)) + '\n';
    return out;
}

std::string surface_csv(const CriterionSurface& surface)
{
    std::string out = "t,s,value\n";
    out.reserve(out.size() + 65536 * 16);
    for (int t = 0; t < CriterionSurface::kLevels; ++t)
        for (int s = 0; s < CriterionSurface::kLevels; ++s)
            out += std::to_string(t) + ',' + std::to_string(s) + ',' + format_full(surface.at(t, s)) + '\n';
    return out;
}

namespace {

void write_text(const fs::path& path, const std::string& data)
{
    std::ofstream f(path, std::ios::binary);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f)
        throw Error("cannot write " + path.string());
}

struct ImageOutcome {
    std::vector<ReportRow> rows;
    std::string diagnostics;
};

ImageOutcome process_image(const RunConfig& config, const std::string& input)
{
    using Clock = std::chrono::steady_clock;
    ImageOutcome outcome;
    const std::string name = fs::path(input).filename().string();
    const std::string stem = artifact_stem(input);
    const fs::path out_dir(config.out_dir);

    auto failed_rows = [&](const std::string& status) {
        for (double q : config.qs) {
            ReportRow row;
            row.image = name;
            row.q = q;
            row.mode = config.mode;
            row.status = status;
            outcome.rows.push_back(row);
        }
    };

    GrayImage img;
    try {
        img = read_pgm_file(input);
    } catch (const Error& e) {
        outcome.diagnostics += input + ": " + e.what() + "\n";
        failed_rows("error");
        return outcome;
    }

    const auto hist_start = Clock::now();
    std::optional<JointHistogram> hist;
    std::optional<Histogram1D> hist1d;
    std::optional<PrefixTables> tables;
    try {
        if (config.mode == Mode::OneD) {
            hist1d.emplace(build_histogram_1d(img));
        } else {
            hist.emplace(build_joint_histogram(img));
            if (config.dump_histogram)
                write_text(out_dir / (stem + ".hist.csv"), histogram_csv(*hist));
        }
    } catch (const Error& e) {
        outcome.diagnostics += input + ": " + e.what() + "\n";
        failed_rows("error");
        return outcome;
    }
    const auto hist_elapsed = Clock::now() - hist_start;

    for (double q : config.qs) {
        ReportRow row;
        row.image = name;
        row.q = q;
        row.mode = config.mode;
        const auto start = Clock::now();
        try {
            int t_star = 0;
            if (config.mode == Mode::OneD) {
                const Threshold1D r = find_threshold_1d(*hist1d, q);
                t_star = r.t_star;
                row.criterion = r.criterion;
            } else {
                tables = tables ? tables->with_q(q) : build_prefix_tables(*hist, q);
                const SearchMode mode = config.mode == Mode::Full ? SearchMode::Full : SearchMode::Diagonal;
                const ThresholdResult r = find_threshold(*tables, mode);
                t_star = r.t_star;
                row.s_star = r.s_star;
                row.criterion = r.criterion;
            }
            row.t_star = t_star;
            row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start + hist_elapsed)
                             .count();
            if (config.write_images)
                write_pgm_file((out_dir / binarized_name(stem, q, t_star)).string(),
                               binarize(img, static_cast<GrayLevel>(t_star)).as_gray());
            if (config.dump_surface && tables)
                write_text(out_dir / (stem + ".q" + format_number(q) + ".surface.csv"),
                           surface_csv(criterion_surface(*tables)));
        } catch (const DegenerateHistogram& e) {
            outcome.diagnostics += input + ": q=" + format_number(q) + ": " + e.what() + "\n";
            row.status = "degenerate";
            row.t_star = row.s_star = -1;
        } catch (const Error& e) {
            outcome.diagnostics += input + ": q=" + format_number(q) + ": " + e.what() + "\n";
            row.status = "error";
            row.t_star = row.s_star = -1;
        }
        outcome.rows.push_back(row);
    }
    return outcome;
}

bool config_valid(const RunConfig& config, std::ostream& err)
{
    if (config.inputs.empty()) {
        err << "error: no input images\n";
        return false;
    }
    if (config.qs.empty()) {
        err << "error: no q values\n";
        return false;
    }
    for (double q : config.qs) {
        if (!(q > 0.0) || !std::isfinite(q)) {
            err << "error: q must be positive, got " << q << "\n";
            return false;
        }
    }
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec || !fs::is_directory(config.out_dir)) {
        err << "error: cannot create output directory " << config.out_dir << "\n";
        return false;
    }
    return true;
}

} // namespace

std::vector<ReportRow> process(const RunConfig& config, std::ostream& err)
{
    std::vector<ImageOutcome> outcomes(config.inputs.size());
    const unsigned jobs = std::clamp<unsigned>(config.jobs, 1, static_cast<unsigned>(config.inputs.size()));
    if (jobs <= 1) {
        for (std::size_t k = 0; k < config.inputs.size(); ++k)
            outcomes[k] = process_image(config, config.inputs[k]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < config.inputs.size(); k = next++)
                    outcomes[k] = process_image(config, config.inputs[k]);
            });
    }

    std::vector<ReportRow> rows;
    for (auto& o : outcomes) {
        err << o.diagnostics;
        rows.insert(rows.end(), o.rows.begin(), o.rows.end());
    }
    return rows;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (!config_valid(config, err))
        return 2;

    const std::vector<ReportRow> rows = process(config, err);

    std::string csv = std::string(kReportHeader) + "\n";
    for (const auto& row : rows)
        csv += format_csv_row(row) + "\n";

    if (config.format == ReportFormat::Csv) {
        out << csv;
    } else {
        out << std::left << std::setw(24) << "image" << std::setw(8) << "q" << std::setw(6) << "mode"
            << std::setw(8) << "t*" << std::setw(8) << "s*" << std::setw(22) << "criterion"
            << "ms\n";
        for (const auto& row : rows) {
            out << std::setw(24) << row.image << std::setw(8) << format_number(row.q) << std::setw(6)
                << mode_name(row.mode);
            if (row.status.empty())
                out << std::setw(8) << row.t_star << std::setw(8) << (row.s_star >= 0 ? std::to_string(row.s_star) : "-")
                    << std::setw(22) << format_full(row.criterion);
            else
                out << std::setw(38) << row.status;
            out << row.millis << "\n";
        }
    }

    if (!config.report_path.empty()) {
        try {
            write_text(config.report_path, csv);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }

    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status.empty(); });
    return all_ok ? 0 : 1;
}

namespace {

int run_gen(const SyntheticParams& params, const std::string& output, int count, const std::string& variant,
            std::ostream& out, std::ostream& err)
{
    const PgmVariant v = variant == "p2" ? PgmVariant::P2 : PgmVariant::P5;
    try {
        if (count <= 1) {
            write_pgm_file(output, generate_synthetic(params), v);
            out << output << "\n";
            return 0;
        }
        fs::create_directories(output);
        const std::string kind = params.kind == SyntheticKind::Bimodal    ? "bimodal"
                                 : params.kind == SyntheticKind::Trimodal ? "trimodal"
                                                                          : "constant";
        for (int k = 0; k < count; ++k) {
            SyntheticParams p = params;
            p.seed = params.seed + static_cast<std::uint64_t>(k);
            const fs::path path = fs::path(output) / (kind + "_s" + std::to_string(p.seed) + ".pgm");
            write_pgm_file(path.string(), generate_synthetic(p), v);
            out << path.string() << "\n";
        }
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-dimensional Tsallis entropy thresholding"};
    app.require_subcommand(0, 1);

    RunConfig config;
    std::string mode = "diag";
    std::string format = "csv";
    app.add_option("inputs", config.inputs, "Input PGM images");
    app.add_option("--q", config.qs, "Entropic index (repeatable, or comma separated)")
        ->delimiter(',')
        ->allow_extra_args(false)
        ->capture_default_str();
    app.add_option("--mode", mode, "Search mode")
        ->check(CLI::IsMember({"diag", "full", "1d"}))
        ->capture_default_str();
    app.add_option("--out", config.out_dir, "Output directory")->capture_default_str();
    app.add_flag("--dump-surface", config.dump_surface, "Write <stem>.q<q>.surface.csv (diag/full only)");
    app.add_flag("--dump-histogram", config.dump_histogram, "Write <stem>.hist.csv (diag/full only)");
    app.add_option("--report", config.report_path, "Also write the CSV report to this file");
    app.add_option("--format", format, "Report format on stdout")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_flag("!--no-images", config.write_images, "Skip writing binarized images");
    app.add_option("--jobs", config.jobs, "Images processed in parallel")->check(CLI::PositiveNumber);

    SyntheticParams params;
    std::string kind = "bimodal";
    std::string gen_out;
    std::string variant = "p5";
    int size = 0;
    int count = 1;
    auto* gen = app.add_subcommand("gen", "Generate synthetic test images");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"bimodal", "trimodal", "constant"}))->capture_default_str();
    gen->add_option("--means", params.means)->delimiter(',');
    gen->add_option("--sigmas", params.sigmas)->delimiter(',');
    gen->add_option("--mix", params.mix)->capture_default_str();
    gen->add_option("--value", params.value, "Gray level for the constant kind");
    gen->add_option("--seed", params.seed)->capture_default_str();
    gen->add_option("--size", size, "Square side; overrides --width/--height");
    gen->add_option("--width", params.width)->capture_default_str();
    gen->add_option("--height", params.height)->capture_default_str();
    gen->add_option("--count", count, "Images with consecutive seeds; -o is then a directory")
        ->check(CLI::PositiveNumber);
    gen->add_option("-o,--output", gen_out)->required();
    gen->add_option("--variant", variant)->check(CLI::IsMember({"p2", "p5"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        params.kind = parse_synthetic_kind(kind);
        if (size > 0)
            params.width = params.height = size;
        return run_gen(params, gen_out, count, variant, out, err);
    }

    config.mode = mode == "full" ? Mode::Full : mode == "1d" ? Mode::OneD : Mode::Diagonal;
    config.format = format == "text" ? ReportFormat::Text : ReportFormat::Csv;
    return run(config, out, err);
}

} // namespace tsallis::cli
