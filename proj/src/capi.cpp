#include "bertrand/bertrand.h"

#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "bertrand/chebyshev.hpp"
#include "bertrand/proofcheck.hpp"
#include "bertrand/report.hpp"
#include "bertrand/sieve.hpp"

struct bp_context {
    bertrand::ProofOptions options;
    std::string last_error;
};

struct bp_report {
    bertrand::Report report;
    std::string text;
    std::string csv;
    bool text_ready = false;
    bool csv_ready = false;
};

namespace {

using namespace bertrand;

template <class Fn>
bp_status guarded(bp_context* ctx, Fn&& fn) {
    auto fail = [ctx](bp_status status, const char* what) {
        if (ctx) ctx->last_error = what;
        return status;
    };
    try {
        fn();
        if (ctx) ctx->last_error.clear();
        return BP_OK;
    } catch (const std::ios_base::failure& e) {
        return fail(BP_ERR_IO, e.what());
    } catch (const PostulateViolation& e) {
        return fail(BP_ERR_POSTULATE_VIOLATED, e.what());
    } catch (const NotCertified& e) {
        return fail(BP_ERR_NOT_CERTIFIED, e.what());
    } catch (const UsageError& e) {
        return fail(BP_ERR_RANGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(BP_ERR_DOMAIN, e.what());
    } catch (const std::overflow_error& e) {
        return fail(BP_ERR_OVERFLOW, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BP_ERR_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BP_ERR_INTERNAL, e.what());
    }
}

bp_certified to_c(const CertifiedReal& x) { return {x.value(), x.err()}; }

bp_verdict to_c(const std::optional<RowVerdict>& v) {
    if (!v) return BP_VERDICT_NONE;
    switch (*v) {
        case RowVerdict::CertainPass: return BP_VERDICT_CERTAIN_PASS;
        case RowVerdict::CertainFail: return BP_VERDICT_CERTAIN_FAIL;
        case RowVerdict::Indeterminate: return BP_VERDICT_INDETERMINATE;
        case RowVerdict::ExactPass: return BP_VERDICT_EXACT_PASS;
    }
    return BP_VERDICT_INDETERMINATE;
}

bp_status invalid(bp_context* ctx, const char* what) {
    if (ctx) ctx->last_error = what;
    return BP_ERR_INVALID_ARGUMENT;
}

bp_status emit(bp_context* ctx, Report report, bp_report** out) {
    if (!out) return invalid(ctx, "null output pointer");
    auto* r = new (std::nothrow) bp_report;
    if (!r) return BP_ERR_INTERNAL;
    r->report = std::move(report);
    *out = r;
    return BP_OK;
}

Report value_report(std::string_view id, std::uint64_t n, const CertifiedReal& value) {
    Report report;
    report.title = std::string(id) + "(" + std::to_string(n) + ")";
    report.summary.emplace_back("value", format_decimal(value.value()));
    report.summary.emplace_back("err", format_decimal(value.err()));
    ReportRow row;
    row.check_id = id;
    row.n = n;
    row.lhs = value;
    report.rows.push_back(row);
    return report;
}

}  // namespace

extern "C" {

const char* bp_status_string(bp_status status) {
    switch (status) {
        case BP_OK: return "ok";
        case BP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BP_ERR_DOMAIN: return "domain error";
        case BP_ERR_RANGE: return "range error";
        case BP_ERR_POSTULATE_VIOLATED: return "postulate violated";
        case BP_ERR_NOT_CERTIFIED: return "not certified";
        case BP_ERR_OVERFLOW: return "overflow";
        case BP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case BP_ERR_IO: return "i/o error";
        case BP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

bp_status bp_context_create(bp_context** out) {
    if (!out) return BP_ERR_INVALID_ARGUMENT;
    *out = new (std::nothrow) bp_context;
    return *out ? BP_OK : BP_ERR_INTERNAL;
}

void bp_context_destroy(bp_context* ctx) { delete ctx; }

bp_status bp_context_set_threads(bp_context* ctx, unsigned threads) {
    if (!ctx) return BP_ERR_INVALID_ARGUMENT;
    ctx->options.sieve.threads = threads;
    return BP_OK;
}

bp_status bp_context_set_segment_bytes(bp_context* ctx, uint64_t bytes) {
    if (!ctx) return BP_ERR_INVALID_ARGUMENT;
    if (bytes == 0 || bytes > (uint64_t{1} << 32)) return invalid(ctx, "segment bytes must be in [1, 2^32]");
    ctx->options.sieve.segment_bytes = static_cast<std::size_t>(bytes);
    return BP_OK;
}

bp_status bp_context_set_exact_cap(bp_context* ctx, uint64_t cap) {
    if (!ctx) return BP_ERR_INVALID_ARGUMENT;
    ctx->options.exact_cap = cap;
    return BP_OK;
}

const char* bp_context_last_error(const bp_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

bp_status bp_is_prime(uint64_t k, int* out) {
    if (!out) return BP_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] { *out = sieve::is_prime(k) ? 1 : 0; });
}

bp_status bp_next_prime_after(bp_context* ctx, uint64_t k, uint64_t* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = sieve::next_prime_after(k, ctx->options.sieve); });
}

bp_status bp_prime_count(bp_context* ctx, uint64_t limit, uint64_t* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = sieve::prime_count(limit, ctx->options.sieve); });
}

bp_status bp_log_nat(uint64_t k, bp_certified* out) {
    if (!out) return BP_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] { *out = to_c(log_nat(k)); });
}

bp_status bp_theta(bp_context* ctx, double x, bp_certified* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = to_c(theta(x, ctx->options.sieve)); });
}

bp_status bp_psi(bp_context* ctx, double x, bp_certified* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = to_c(psi(x, ctx->options.sieve)); });
}

bp_status bp_psi_from_theta(bp_context* ctx, double x, bp_certified* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = to_c(psi_from_theta(x, ctx->options.sieve)); });
}

bp_status bp_log_factorial(bp_context* ctx, uint64_t k, bp_certified* out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *out = to_c(log_factorial(k, ctx->options.sieve)); });
}

bp_status bp_central_binomial(bp_context* ctx, uint64_t n, bp_certified* log_out, char* digits,
                              size_t digits_capacity, size_t* digits_len) {
    if (!ctx || !log_out) return invalid(ctx, "null argument");
    bool too_small = false;
    const bp_status status = guarded(ctx, [&] {
        const auto cb = central_binomial(n, ctx->options.exact_cap, ctx->options.sieve);
        *log_out = to_c(cb.log_value);
        std::size_t len = 0;
        std::string text;
        if (cb.exact) {
            text = cb.exact->get_str();
            len = text.size();
        }
        if (digits_len) *digits_len = len;
        if (digits && cb.exact) {
            if (digits_capacity < len + 1) {
                too_small = true;
                return;
            }
            text.copy(digits, len);
            digits[len] = '\0';
        }
    });
    if (status == BP_OK && too_small) {
        ctx->last_error = "digit buffer too small";
        return BP_ERR_BUFFER_TOO_SMALL;
    }
    return status;
}

bp_status bp_threshold(uint64_t* n_out, bp_certified* at_n, bp_certified* at_next) {
    if (!n_out) return BP_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        const auto t = threshold_n();
        *n_out = t.n;
        if (at_n) *at_n = to_c(t.at_n);
        if (at_next) *at_next = to_c(t.at_next);
    });
}

bp_status bp_bertrand_witness(bp_context* ctx, uint64_t n, uint64_t* p_out) {
    if (!ctx || !p_out) return invalid(ctx, "null argument");
    return guarded(ctx, [&] { *p_out = bertrand_witness(n, ctx->options.sieve).p; });
}

bp_status bp_run_value(bp_context* ctx, bp_function fn, double x, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] {
        const auto& opts = ctx->options.sieve;
        const std::uint64_t n = floor_argument(x);
        switch (fn) {
            case BP_FN_THETA: report = value_report("THETA", n, theta(x, opts)); break;
            case BP_FN_PSI: report = value_report("PSI", n, psi(x, opts)); break;
            case BP_FN_PSI_FROM_THETA: report = value_report("PSI_FROM_THETA", n, psi_from_theta(x, opts)); break;
            case BP_FN_LOG_FACTORIAL: report = value_report("LOG_FACTORIAL", n, log_factorial(n, opts)); break;
            case BP_FN_BINOMIAL: {
                const auto cb = central_binomial(n, ctx->options.exact_cap, opts);
                report = value_report("BINOM", n, cb.log_value);
                report.title = "binom(" + std::to_string(n) + ")";
                if (cb.exact) report.summary.emplace_back("exact", cb.exact->get_str());
                else report.notes.emplace_back("n exceeds the exact cap; only the certified log is reported");
                break;
            }
            default: throw std::invalid_argument("unknown function");
        }
    });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_identity(bp_context* ctx, const char* check_id, uint64_t from, uint64_t to, bp_report** out) {
    if (!ctx || !out || !check_id) return invalid(ctx, "null argument");
    const auto id = parse_identity_id(check_id);
    if (!id) return invalid(ctx, "unknown identity id (expected EQ1, EQ2 or EQ3)");
    Report report;
    const bp_status status = guarded(ctx, [&] {
        if (from < 1 || from > to) throw UsageError("identity: need 1 <= from <= to");
        report = to_report(ProofEngine(to, ctx->options).identities(*id, from, to));
    });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_inequality(bp_context* ctx, const char* check_id, uint64_t from, uint64_t to, bp_report** out) {
    if (!ctx || !out || !check_id) return invalid(ctx, "null argument");
    const auto id = parse_check_id(check_id);
    if (!id) return invalid(ctx, "unknown check id");
    Report report;
    const bp_status status = guarded(ctx, [&] { report = to_report(verify_inequality(*id, from, to, ctx->options)); });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_induction(bp_context* ctx, uint64_t n_max, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] { report = to_report(verify_induction(n_max, ctx->options)); });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_threshold(bp_context* ctx, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] { report = to_report(threshold_n()); });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_bertrand(bp_context* ctx, uint64_t n, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] {
        const auto w = bertrand_witness(n, ctx->options.sieve);
        BertrandScan single;
        single.n_max = n;
        single.witnesses.push_back(w);
        report = to_report(single);
        report.title = "bertrand n=" + std::to_string(n);
        report.summary = {{"witness", std::to_string(w.n) + " < " + std::to_string(w.p) + " < " +
                                          std::to_string(2 * w.n)}};
    });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_bertrand_scan(bp_context* ctx, uint64_t n_max, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] { report = to_report(bertrand_scan(n_max, ctx->options.sieve)); });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

bp_status bp_run_verify_all(bp_context* ctx, uint64_t n_max, bp_report** out) {
    if (!ctx || !out) return invalid(ctx, "null argument");
    Report report;
    const bp_status status = guarded(ctx, [&] { report = to_report(verify_all(n_max, ctx->options)); });
    if (status != BP_OK) return status;
    return emit(ctx, std::move(report), out);
}

void bp_report_destroy(bp_report* report) { delete report; }

bp_outcome bp_report_outcome(const bp_report* report) {
    if (!report) return BP_OUTCOME_FAIL;
    switch (report->report.outcome) {
        case Outcome::Pass: return BP_OUTCOME_PASS;
        case Outcome::Fail: return BP_OUTCOME_FAIL;
        case Outcome::Indeterminate: return BP_OUTCOME_INDETERMINATE;
    }
    return BP_OUTCOME_FAIL;
}

size_t bp_report_row_count(const bp_report* report) { return report ? report->report.rows.size() : 0; }

bp_status bp_report_row(const bp_report* report, size_t index, bp_row* out) {
    if (!report || !out) return BP_ERR_INVALID_ARGUMENT;
    if (index >= report->report.rows.size()) return BP_ERR_RANGE;
    const auto& row = report->report.rows[index];
    // Labels are string literals, so the view is NUL-terminated.
    out->check_id = row.check_id.data();
    out->n = row.n;
    out->lhs = to_c(row.lhs);
    out->rhs = to_c(row.rhs);
    out->has_rhs = row.has_rhs ? 1 : 0;
    out->verdict = to_c(row.verdict);
    out->margin = row.margin;
    return BP_OK;
}

size_t bp_report_note_count(const bp_report* report) { return report ? report->report.notes.size() : 0; }

const char* bp_report_note(const bp_report* report, size_t index) {
    if (!report || index >= report->report.notes.size()) return nullptr;
    return report->report.notes[index].c_str();
}

bp_status bp_report_render(bp_report* report, bp_format format, const char** text, size_t* length) {
    if (!report || !text) return BP_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        std::string* target = nullptr;
        if (format == BP_FORMAT_CSV) {
            if (!report->csv_ready) report->csv = render_csv(report->report);
            report->csv_ready = true;
            target = &report->csv;
        } else {
            if (!report->text_ready) report->text = render_text(report->report);
            report->text_ready = true;
            target = &report->text;
        }
        *text = target->c_str();
        if (length) *length = target->size();
    });
}

bp_status bp_report_write(const bp_report* report, bp_format format, const char* path) {
    if (!report) return BP_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (path) {
            file.open(path, std::ios::binary | std::ios::trunc);
            if (!file) throw std::ios_base::failure("cannot open output file");
            out = &file;
        }
        if (format == BP_FORMAT_CSV) write_csv(*out, report->report);
        else write_text(*out, report->report);
        out->flush();
        if (!*out) throw std::ios_base::failure("write failed");
    });
}

}  // extern "C"
