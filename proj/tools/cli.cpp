#include "cli.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "bertrand/bertrand.h"

namespace bertrand::cli {

namespace {

struct ContextDeleter {
    void operator()(bp_context* ctx) const { bp_context_destroy(ctx); }
};
struct ReportDeleter {
    void operator()(bp_report* r) const { bp_report_destroy(r); }
};
using ContextPtr = std::unique_ptr<bp_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<bp_report, ReportDeleter>;

int exit_code_for(bp_status status) {
    switch (status) {
        case BP_OK: return kExitPass;
        case BP_ERR_INVALID_ARGUMENT:
        case BP_ERR_DOMAIN:
        case BP_ERR_RANGE:
        case BP_ERR_OVERFLOW: return kExitUsage;
        case BP_ERR_NOT_CERTIFIED: return kExitIndeterminate;
        case BP_ERR_POSTULATE_VIOLATED:
        case BP_ERR_BUFFER_TOO_SMALL:
        case BP_ERR_IO:
        case BP_ERR_INTERNAL: return kExitFail;
    }
    return kExitFail;
}

int exit_code_for(bp_outcome outcome) {
    switch (outcome) {
        case BP_OUTCOME_PASS: return kExitPass;
        case BP_OUTCOME_FAIL: return kExitFail;
        case BP_OUTCOME_INDETERMINATE: return kExitIndeterminate;
    }
    return kExitFail;
}

struct GlobalFlags {
    std::string emit = "text";
    std::string out;
    unsigned threads = 0;
    std::uint64_t segment_bytes = 262144;
    std::uint64_t exact_cap = 10000;
};

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Certified Chebyshev-function checks for Bertrand's postulate", "bertrand"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--emit", flags.emit, "Output format")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--out", flags.out, "Output path (default: standard output)");
    app.add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    app.add_option("--segment-bytes", flags.segment_bytes, "Sieve segment size in bytes")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
    app.add_option("--exact-cap", flags.exact_cap, "Largest n with exact big-integer N_n");

    // Each subcommand stores the action that produces its report.
    std::function<bp_status(bp_context*, bp_report**)> action;

    double x = 0;
    std::uint64_t n = 0;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::string check;

    auto value_command = [&](const char* name, const char* help, bp_function fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("X", x, "Argument")->required();
        sub->callback([&, fn] { action = [&, fn](bp_context* c, bp_report** r) { return bp_run_value(c, fn, x, r); }; });
    };
    value_command("theta", "theta(X): sum of log p over primes p <= X", BP_FN_THETA);
    value_command("psi", "psi(X): sum of log p over prime powers p^m <= X", BP_FN_PSI);
    value_command("psi-from-theta", "psi(X) via sum of theta(X^(1/m))", BP_FN_PSI_FROM_THETA);
    value_command("log-factorial", "log(floor(X)!)", BP_FN_LOG_FACTORIAL);

    auto* binom = app.add_subcommand("binom", "Central binomial coefficient N_n = (2n)!/(n!)^2");
    binom->add_option("N", n)->required();
    binom->callback([&] {
        action = [&](bp_context* c, bp_report** r) { return bp_run_value(c, BP_FN_BINOMIAL, static_cast<double>(n), r); };
    });

    auto* identity = app.add_subcommand("identity", "Check an exact identity over a range of n");
    identity->add_option("--check", check)->required()->check(CLI::IsMember({"EQ1", "EQ2", "EQ3"}));
    identity->add_option("--from", from)->required();
    identity->add_option("--to", to)->required();
    identity->callback([&] {
        action = [&](bp_context* c, bp_report** r) { return bp_run_identity(c, check.c_str(), from, to, r); };
    });

    auto* verify = app.add_subcommand("verify", "Certify one inequality over a range of n");
    verify->add_option("--check", check)
        ->required()
        ->check(CLI::IsMember(
            {"EQ4", "EQ5", "EQ6", "EQ7_UPPER", "EQ7_LOWER", "EQ8", "EQ9", "EQ10", "EQ11", "FINAL"}));
    verify->add_option("--from", from)->required();
    verify->add_option("--to", to)->required();
    verify->callback([&] {
        action = [&](bp_context* c, bp_report** r) { return bp_run_inequality(c, check.c_str(), from, to, r); };
    });

    auto* induction = app.add_subcommand("induction", "Certify the central-binomial induction up to N");
    induction->add_option("--to", to)->required();
    induction->callback([&] { action = [&](bp_context* c, bp_report** r) { return bp_run_induction(c, to, r); }; });

    auto* threshold = app.add_subcommand("threshold", "Smallest N with a*n - 2b*sqrt(2n) - (2b/3)*n > 0 for n > N");
    threshold->callback([&] { action = [](bp_context* c, bp_report** r) { return bp_run_threshold(c, r); }; });

    auto* bertrand = app.add_subcommand("bertrand", "Witness prime p with N < p < 2N");
    bertrand->add_option("N", n)->required();
    bertrand->callback([&] { action = [&](bp_context* c, bp_report** r) { return bp_run_bertrand(c, n, r); }; });

    auto* scan = app.add_subcommand("bertrand-scan", "Witnesses for every 1 < n <= N");
    scan->add_option("--to", to)->required();
    scan->callback([&] { action = [&](bp_context* c, bp_report** r) { return bp_run_bertrand_scan(c, to, r); }; });

    auto* all = app.add_subcommand("verify-all", "Run the full certification up to N (N >= 506)");
    all->add_option("--to", to)->required();
    all->callback([&] { action = [&](bp_context* c, bp_report** r) { return bp_run_verify_all(c, to, r); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        std::cerr << app.help();
        return kExitUsage;
    }

    bp_context* raw_ctx = nullptr;
    if (bp_context_create(&raw_ctx) != BP_OK) {
        std::cerr << "error: cannot allocate context\n";
        return kExitFail;
    }
    ContextPtr ctx(raw_ctx);
    bp_context_set_threads(ctx.get(), flags.threads);
    bp_context_set_segment_bytes(ctx.get(), flags.segment_bytes);
    bp_context_set_exact_cap(ctx.get(), flags.exact_cap);

    bp_report* raw_report = nullptr;
    const bp_status status = action(ctx.get(), &raw_report);
    if (status != BP_OK) {
        std::cerr << "error: " << bp_status_string(status) << ": " << bp_context_last_error(ctx.get()) << '\n';
        return exit_code_for(status);
    }
    ReportPtr report(raw_report);

    const bp_format format = flags.emit == "csv" ? BP_FORMAT_CSV : BP_FORMAT_TEXT;
    const bp_status written = bp_report_write(report.get(), format, flags.out.empty() ? nullptr : flags.out.c_str());
    if (written != BP_OK) {
        std::cerr << "error: " << bp_status_string(written) << '\n';
        return kExitFail;
    }
    return exit_code_for(bp_report_outcome(report.get()));
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bertrand");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace bertrand::cli
