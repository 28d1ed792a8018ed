#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "surdlab/error.hpp"
#include "surdlab/explorer.hpp"

namespace surdlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Falsified: return kExitFailed;
        case ErrorKind::Limit: return kExitLimit;
        case ErrorKind::Precondition:
        case ErrorKind::Io: return kExitUsage;
    }
    return kExitUsage;
}

Nat parse_nat(const std::string& text, const char* flag) {
    Nat v;
    if (text.empty() || v.set_str(text, 10) != 0 || v < 0) {
        fail(ErrorKind::Precondition, "bad-argument", std::string(flag) + " must be a non-negative integer");
    }
    return v;
}

// Writes to --out when given, otherwise to the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) fail(ErrorKind::Io, "io", "cannot open " + path + " for writing");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    bool to_file() const { return file_ != nullptr; }
    void close() {
        if (file_) {
            file_->close();
            if (!*file_) fail(ErrorKind::Io, "io", "write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

struct Options {
    std::string d = "2";
    std::string out;
    int workers = 1;
    std::uint64_t nmin = 1;
    std::uint64_t nmax = 0;
    std::uint64_t kmax = 0;
    std::uint64_t k = 1;
    std::uint64_t threshold = kDefaultThreshold;
    std::uint64_t r = 1;
    std::string suite;
    SuiteBounds bounds;
    PipelineLimits limits;
    std::string freq_out;
};

int do_scan(const Options& o, std::ostream& out, std::ostream& err) {
    const Nat d = parse_nat(o.d, "--d");
    const auto records = scan_periods(d, o.nmax, o.workers);
    Sink sink(o.out, out);
    write_scan_csv(sink.stream(), records);
    sink.close();
    const LimitPointReport report = limit_points(records, o.threshold);
    if (!o.freq_out.empty()) {
        Sink freq(o.freq_out, out);
        write_frequency_csv(freq.stream(), report);
        freq.close();
    }
    write_limit_report(sink.to_file() ? out : err, report);
    return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
    SuiteBounds bounds = o.bounds;
    bounds.workers = o.workers;
    const SuiteResult result = run_suite(o.suite, bounds);
    Sink sink(o.out, out);
    auto& os = sink.stream();
    os << "suite " << result.suite << ": " << (result.passed ? "PASS" : "FAIL") << " (" << result.cases
       << " cases)\n";
    if (!result.passed) os << "counterexample: " << result.counterexample << '\n';
    sink.close();
    if (sink.to_file()) out << "suite " << result.suite << ": " << (result.passed ? "PASS" : "FAIL") << '\n';
    return result.passed ? kExitOk : kExitFailed;
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const Nat d = parse_nat(o.d, "--d");
    const ConstructionCertificate cert = theorem_pipeline(d, o.r, o.limits);
    Sink sink(o.out, out);
    sink.stream() << certificate_to_json(cert).dump(2) << '\n';
    sink.close();
    std::ostream& log = sink.to_file() ? out : err;
    log << "d' = " << cert.working_d << ", p = " << cert.p << ", q = " << cert.q << ", m = " << cert.m
        << ", L = " << cert.L << ", measured D = " << cert.measured_D << " in {" << cert.window_lo() << ", "
        << cert.window_hi() << "}: " << (cert.verified() ? "verified" : "NOT verified") << '\n';
    return cert.verified() ? kExitOk : kExitFailed;
}

int do_spectrum(const Options& o, std::ostream& out) {
    const auto rows = euclid_spectrum(o.nmin, o.nmax, o.k, o.workers);
    Sink sink(o.out, out);
    write_spectrum_csv(sink.stream(), rows);
    sink.close();
    return kExitOk;
}

int do_q3(const Options& o, std::ostream& out) {
    const Nat d = parse_nat(o.d, "--d");
    const auto records = scan_periods(d, o.nmax, o.workers);
    const LimitPointReport report = limit_points(records, o.threshold);
    Sink sink(o.out, out);
    write_q3_csv(sink.stream(), question3(report, o.kmax));
    sink.close();
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"surdlab: continued-fraction periods of n*sqrt(d), Pell machinery and constructions"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Output file (default: stdout)");
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* scan = app.add_subcommand("scan", "D(n sqrt(d)) for n = 1..nmax as CSV");
    add_common(scan);
    scan->add_option("--d", o.d, "Non-square radicand")->required();
    scan->add_option("--nmax", o.nmax, "Largest multiplier n")->required()->check(CLI::PositiveNumber);
    scan->add_option("--threshold", o.threshold, "Frequency for a limit-point candidate")
        ->capture_default_str();
    scan->add_option("--freq-out", o.freq_out, "Write the D frequency table as CSV");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify);
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--dmax", o.bounds.dmax, "Largest radicand");
    verify->add_option("--nmax", o.bounds.nmax, "Largest multiplier (even-parity)");
    verify->add_option("--bound", o.bounds.bound, "Prime bound (pell-period) or b bound (fib)");
    verify->add_option("--kmax", o.bounds.kmax, "Largest convergent index (eq1eq2)");
    verify->add_option("--samples", o.bounds.samples, "Sample count (fib)");
    verify->add_option("--seed", o.bounds.seed, "RNG seed (fib)");

    auto* construct = app.add_subcommand("construct", "Build and verify a construction certificate");
    add_common(construct);
    construct->add_option("--d", o.d, "Non-square radicand")->required();
    construct->add_option("--r", o.r, "Odd parameter r")->capture_default_str();
    construct->add_option("--trial-limit", o.limits.trial_division_limit, "Trial-division bound for p")
        ->capture_default_str();
    construct->add_option("--q-limit", o.limits.q_candidate_limit, "Number of q candidates tried")
        ->capture_default_str();
    construct->add_option("--index-limit", o.limits.max_solution_index, "Largest Pell solution index m")
        ->capture_default_str();

    auto* spectrum = app.add_subcommand("euclid-spectrum", "Attained Euclid lengths L(m, n), m <= n");
    add_common(spectrum);
    spectrum->add_option("--nmin", o.nmin, "Smallest n")->capture_default_str();
    spectrum->add_option("--nmax", o.nmax, "Largest n")->required();
    spectrum->add_option("--k", o.k, "Required coverage 1..k")->capture_default_str();

    auto* q3 = app.add_subcommand("q3", "Is k or k+1 an empirical limit point, for k <= kmax");
    add_common(q3);
    q3->add_option("--d", o.d, "Non-square radicand")->required();
    q3->add_option("--nmax", o.nmax, "Scan length")->required()->check(CLI::PositiveNumber);
    q3->add_option("--kmax", o.kmax, "Largest k")->required();
    q3->add_option("--threshold", o.threshold, "Frequency for a limit-point candidate")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (scan->parsed()) return do_scan(o, out, err);
        if (verify->parsed()) return do_verify(o, out);
        if (construct->parsed()) return do_construct(o, out, err);
        if (spectrum->parsed()) return do_spectrum(o, out);
        if (q3->parsed()) return do_q3(o, out);
    } catch (const Error& e) {
        err << "{\"error\": \"" << e.reason() << "\", \"message\": " << nlohmann::json(e.what()).dump() << "}\n";
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

}  // namespace surdlab
