#include "robustperiod/cli.hpp"

#include "robustperiod/csv.hpp"
#include "robustperiod/detector.hpp"
#include "robustperiod/report_json.hpp"
#include "robustperiod/synth.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace robustperiod::cli {

namespace {

struct DetectOptions {
    std::string input;
    std::string column = "0";
    std::string output;
    std::string diagnosticsDir;
    bool noRobust = false;
    DetectorConfig cfg;
};

struct SynthOptions {
    std::vector<double> periods;
    std::vector<double> amplitudes;
    std::size_t length = 1000;
    std::string waveform = "sin";
    double noiseVar = 0.1;
    double outlierRatio = 0.01;
    double outlierAmplitude = 5.0;
    double trend = 10.0;
    std::uint64_t seed = 0;
    std::string output;
};

struct BenchOptions {
    std::string scenario;
    SynthOptions spec;
    std::size_t runs = 100;
    double tolerance = 0.02;
    bool noRobust = false;
    std::string output;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        io::writeFileAtomic(path, text);
    }
}

void dumpDiagnostics(const PeriodReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& d : report.diagnostics) {
        std::ostringstream csv;
        csv << "t,coefficient,periodogram,acf\n";
        csv.precision(17);
        const std::size_t rows = d.coefficients.size();
        for (std::size_t t = 0; t < rows; ++t) {
            csv << t << ',' << d.coefficients[t] << ',';
            if (t < d.periodogram.size()) {
                csv << d.periodogram[t];
            }
            csv << ',';
            if (t < d.acf.size()) {
                csv << d.acf[t];
            }
            csv << '\n';
        }
        io::writeFileAtomic(dir / ("level_" + std::to_string(d.level) + ".csv"), csv.str());
    }
}

int runDetect(const DetectOptions& opt, std::ostream& out) {
    DetectorConfig cfg = opt.cfg;
    cfg.robust_mode = !opt.noRobust;
    const auto series = io::readCsv(opt.input, opt.column);
    const auto report = robustPeriod(series, cfg);
    emit(toJson(report).dump(2) + "\n", opt.output, out);
    if (!opt.diagnosticsDir.empty()) {
        dumpDiagnostics(report, opt.diagnosticsDir);
    }
    return kExitOk;
}

synth::SyntheticSpec toSpec(const SynthOptions& opt, synth::SyntheticSpec base) {
    if (!opt.periods.empty()) {
        base.periods = opt.periods;
        base.amplitudes = opt.amplitudes.empty() ? std::vector<double>(opt.periods.size(), 1.0)
                                                 : opt.amplitudes;
    } else if (!opt.amplitudes.empty()) {
        base.amplitudes = opt.amplitudes;
    }
    base.length = opt.length;
    base.waveform = synth::parseWaveform(opt.waveform);
    base.noise_variance = opt.noiseVar;
    base.outlier_ratio = opt.outlierRatio;
    base.outlier_amplitude = opt.outlierAmplitude;
    base.trend_amplitude = opt.trend;
    base.seed = opt.seed;
    return base;
}

int runSynth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
    const auto spec = toSpec(opt, synth::SyntheticSpec{});
    const auto series = synth::generate(spec);
    emit(io::formatCsvColumn(series.values, "value"), opt.output, out);
    err << nlohmann::json{{"periods", spec.periods}}.dump() << "\n";
    return kExitOk;
}

void addSpecFlags(CLI::App* cmd, SynthOptions& s) {
    cmd->add_option("--periods", s.periods, "Comma-separated period lengths")->delimiter(',');
    cmd->add_option("--amplitudes", s.amplitudes, "Comma-separated amplitudes")->delimiter(',');
    cmd->add_option("--length", s.length, "Series length");
    cmd->add_option("--waveform", s.waveform, "sin, square or triangle");
    cmd->add_option("--noise-var", s.noiseVar, "Gaussian noise variance");
    cmd->add_option("--outlier-ratio", s.outlierRatio, "Fraction of samples hit by spikes/dips");
    cmd->add_option("--outlier-amplitude", s.outlierAmplitude, "Spike/dip magnitude");
    cmd->add_option("--trend", s.trend, "Triangle trend amplitude");
}

void addDetectorFlags(CLI::App* cmd, DetectorConfig& cfg) {
    cmd->add_option("--lambda", cfg.preprocess.hp_lambda, "HP smoothing weight");
    cmd->add_option("--clip", cfg.preprocess.clip_c, "Clipping bound in MAD units");
    cmd->add_option("--zeta", cfg.admm.zeta, "Huber threshold");
    cmd->add_option("--alpha", cfg.fisher_alpha, "Fisher test significance level");
    cmd->add_option("--acf-height", cfg.acf_height, "ACF peak height threshold");
    cmd->add_option("--share-threshold", cfg.share_threshold,
                    "Minimum wavelet variance share of a level");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Robust multi-periodicity detection for time series", "robustperiod"};
    app.require_subcommand(1);

    DetectOptions detect;
    auto* detectCmd = app.add_subcommand("detect", "Detect periods in a CSV column");
    detectCmd->add_option("--input", detect.input, "CSV file")->required();
    detectCmd->add_option("--column", detect.column, "Column name or zero-based index");
    detectCmd->add_option("--output", detect.output, "Write the JSON report here");
    detectCmd->add_flag("--no-robust", detect.noRobust, "Non-robust ablation path");
    addDetectorFlags(detectCmd, detect.cfg);
    detectCmd->add_option("--dump-diagnostics", detect.diagnosticsDir,
                          "Directory for per-level coefficient/periodogram/ACF CSVs");

    SynthOptions synthOpt;
    auto* synthCmd = app.add_subcommand("synth", "Generate a synthetic periodic series");
    addSpecFlags(synthCmd, synthOpt);
    synthCmd->add_option("--seed", synthOpt.seed, "PRNG seed");
    synthCmd->add_option("--output", synthOpt.output, "Write the CSV here");

    BenchOptions bench;
    auto* benchCmd = app.add_subcommand("bench", "Score detection on seeded synthetic series");
    benchCmd->add_option("--scenario", bench.scenario, "Named scenario");
    addSpecFlags(benchCmd, bench.spec);
    benchCmd->add_option("--runs", bench.runs, "Number of seeds");
    benchCmd->add_option("--tolerance", bench.tolerance, "Relative match tolerance");
    benchCmd->add_flag("--no-robust", bench.noRobust, "Non-robust ablation path");
    DetectorConfig benchCfg;
    addDetectorFlags(benchCmd, benchCfg);
    benchCmd->add_option("--output", bench.output, "Write the JSON result here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (detectCmd->parsed()) {
            return runDetect(detect, out);
        }
        if (synthCmd->parsed()) {
            return runSynth(synthOpt, out, err);
        }
        synth::SyntheticSpec base;
        std::string name = "custom";
        if (!bench.scenario.empty()) {
            base = synth::scenario(bench.scenario);
            name = bench.scenario;
            // Scenario values win unless a flag was given explicitly.
            SynthOptions merged;
            merged.length = benchCmd->count("--length") ? bench.spec.length : base.length;
            merged.waveform = benchCmd->count("--waveform") ? bench.spec.waveform : synth::toString(base.waveform);
            merged.noiseVar = benchCmd->count("--noise-var") ? bench.spec.noiseVar : base.noise_variance;
            merged.outlierRatio = benchCmd->count("--outlier-ratio") ? bench.spec.outlierRatio : base.outlier_ratio;
            merged.outlierAmplitude =
                benchCmd->count("--outlier-amplitude") ? bench.spec.outlierAmplitude : base.outlier_amplitude;
            merged.trend = benchCmd->count("--trend") ? bench.spec.trend : base.trend_amplitude;
            merged.periods = bench.spec.periods;
            merged.amplitudes = bench.spec.amplitudes;
            bench.spec = merged;
        }
        DetectorConfig cfg = benchCfg;
        cfg.robust_mode = !bench.noRobust;
        const auto result = synth::runBenchmark(toSpec(bench.spec, base), bench.runs, cfg,
                                                bench.tolerance, name);
        emit(toJson(result).dump(2) + "\n", bench.output, out);
        return kExitOk;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace robustperiod::cli
