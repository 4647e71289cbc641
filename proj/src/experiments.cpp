#include "parity/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "parity/scan.hpp"
#include "parity/symbols.hpp"

#include "json_detail.hpp"

namespace parity {

namespace {

bool is_perfect_square(i128 n) {
    if (n < 0) return false;
    u128 u = static_cast<u128>(n);
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(u)));
    for (u64 c : {r > 1 ? r - 1 : 0, r, r + 1, r + 2})
        if (static_cast<u128>(c) * c == u) return true;
    return false;
}

std::string join_coeffs(const std::vector<i64>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += "_";
        s += (cs[i] < 0 ? "m" + std::to_string(-cs[i]) : std::to_string(cs[i]));
    }
    return s;
}

}  // namespace

void FormSpec::validate() const {
    switch (kind) {
        case FormKind::triple_linear:
            for (const auto& row : linear)
                if (row[0] == 0 && row[1] == 0)
                    throw std::domain_error("FormSpec: zero row in linear factor matrix");
            break;
        case FormKind::quad_times_linear: {
            i128 D = static_cast<i128>(quad[1]) * quad[1] -
                     4 * static_cast<i128>(quad[0]) * quad[2];
            if (is_perfect_square(D))
                throw std::domain_error(
                    "FormSpec: quadratic part has square discriminant (reducible)");
            if (quad[3] == 0 && quad[4] == 0)
                throw std::domain_error("FormSpec: zero linear factor");
            break;
        }
        case FormKind::twisted_triple:
        case FormKind::root_number_family:
            break;
    }
}

std::string FormSpec::name() const {
    std::string base;
    switch (kind) {
        case FormKind::triple_linear:
            base = "triple_" + join_coeffs({linear[0][0], linear[0][1], linear[1][0], linear[1][1],
                                            linear[2][0], linear[2][1]});
            break;
        case FormKind::quad_times_linear:
            base = "quadlin_" + join_coeffs({quad[0], quad[1], quad[2], quad[3], quad[4]});
            break;
        case FormKind::twisted_triple:
            base = "twisted_triple";
            break;
        case FormKind::root_number_family:
            base = "root_number";
            break;
    }
    if (coprime_filter && (kind == FormKind::triple_linear || kind == FormKind::quad_times_linear))
        base += "_coprime";
    return base;
}

i128 FormSpec::factor_bound(i64 Bx, i64 By) const {
    i128 bx = Bx < 0 ? -static_cast<i128>(Bx) : Bx;
    i128 by = By < 0 ? -static_cast<i128>(By) : By;
    auto lin = [&](i64 a, i64 b) {
        return abs128(a) * bx + abs128(b) * by;
    };
    switch (kind) {
        case FormKind::triple_linear: {
            i128 m = 0;
            for (const auto& row : linear) m = std::max(m, lin(row[0], row[1]));
            return m;
        }
        case FormKind::quad_times_linear: {
            i128 q = abs128(quad[0]) * bx * bx + abs128(quad[1]) * bx * by +
                     abs128(quad[2]) * by * by;
            return std::max(q, lin(quad[3], quad[4]));
        }
        case FormKind::twisted_triple:
            return bx + by;
        case FormKind::root_number_family:
            return 0;  // evaluated by factorization, not by table
    }
    return 0;
}

double FormSpec::envelope(i64 N) const {
    if (N < 3) throw std::domain_error("FormSpec::envelope: N must be at least 3");
    double ln = std::log(static_cast<double>(N));
    double lln = std::log(ln);
    switch (kind) {
        case FormKind::triple_linear:
        case FormKind::quad_times_linear:
            return lln / ln;
        case FormKind::twisted_triple:
        case FormKind::root_number_family:
            return lln / std::sqrt(ln);
    }
    return lln / ln;
}

namespace {

struct LambdaEval {
    const LiouvilleTable* table;
    const Factorizer* fac;
    bool fallback;

    int operator()(i128 u) const {
        if (u == 0) return 0;
        if (table != nullptr && table->covers(u)) return table->at(u);
        if (!fallback) {
            i64 limit = table ? table->limit : 0;
            throw resource_error("lambda value " + to_string(abs128(u)) +
                                 " beyond table limit " + std::to_string(limit) +
                                 "; required limit " + to_string(abs128(u)));
        }
        return fac->factor(u).big_omega() % 2 == 0 ? 1 : -1;
    }
};

// Exact per-point term of each family; values in {-1, 0, +1}.
int point_term(const FormSpec& form, const LambdaEval& lam, i64 x, i64 y) {
    if (form.coprime_effective() && std::gcd(std::abs(x), std::abs(y)) != 1) return 0;
    switch (form.kind) {
        case FormKind::triple_linear: {
            int t = 1;
            for (const auto& row : form.linear) {
                i128 u = static_cast<i128>(row[0]) * x + static_cast<i128>(row[1]) * y;
                int l = lam(u);
                if (l == 0) return 0;
                t *= l;
            }
            return t;
        }
        case FormKind::quad_times_linear: {
            i128 q = static_cast<i128>(form.quad[0]) * x * x +
                     static_cast<i128>(form.quad[1]) * x * y +
                     static_cast<i128>(form.quad[2]) * y * y;
            i128 l = static_cast<i128>(form.quad[3]) * x + static_cast<i128>(form.quad[4]) * y;
            int a = lam(q);
            if (a == 0) return 0;
            int b = lam(l);
            return a * b;
        }
        case FormKind::twisted_triple: {
            int t = lam(x);
            if (t == 0) return 0;
            int u = lam(y);
            if (u == 0) return 0;
            int v = lam(static_cast<i128>(x) - y);
            if (v == 0) return 0;
            return t * u * v * symbol_ab(y, x);  // x != 0 since lambda(x) != 0
        }
        case FormKind::root_number_family: {
            if (x == 0 || y == 0 || x == y) return 0;
            return root_number(x, y);
        }
    }
    return 0;
}

}  // namespace

ReportRow run_chowla(const FormSpec& form, const ConvexRegion& S, const LatticeCoset& L, i64 N,
                     const EngineOptions& opt) {
    form.validate();
    bool needs_table = form.kind != FormKind::root_number_family;
    if (needs_table && opt.table == nullptr)
        throw std::domain_error("run_chowla: a lambda table is required for this family");
    const Factorizer& fac = opt.factorizer ? *opt.factorizer : default_factorizer();
    LambdaEval lam{opt.table, &fac, opt.allow_factor_fallback};

    auto t0 = std::chrono::steady_clock::now();
    ReportRow row;
    row.form = form.name();
    row.N = N;
    row.count = checked_i64(count_points(S, L), "run_chowla count");

    i128 raw = 0;
    auto yr = integer_y_range(S);
    if (yr) {
        int threads = std::max(1, opt.threads);
        i64 ylo = yr->first, yhi = yr->second;
        i64 span = yhi - ylo + 1;
        threads = static_cast<int>(std::min<i64>(threads, span));
        std::vector<i128> partial(threads, 0);
        std::vector<std::exception_ptr> errors(threads);
        auto work = [&](int idx, i64 lo, i64 hi) {
            try {
                i128 acc = 0;
                for_each_row(S, L, lo, hi, [&](const LatticeRow& r) {
                    for (i64 k = 0; k < r.count; ++k) {
                        i64 x = r.x_first + k * r.x_step;
                        acc += point_term(form, lam, x, r.y);
                    }
                });
                partial[idx] = acc;
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        };
        if (threads == 1) {
            work(0, ylo, yhi);
        } else {
            std::vector<std::thread> pool;
            i64 chunk = span / threads, extra = span % threads;
            i64 lo = ylo;
            for (int i = 0; i < threads; ++i) {
                i64 len = chunk + (i < extra ? 1 : 0);
                pool.emplace_back(work, i, lo, lo + len - 1);
                lo += len;
            }
            for (auto& th : pool) th.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (i128 p : partial) raw += p;
    }
    row.raw = checked_i64(raw, "run_chowla raw");

    Rat idx = Rat(checked_i64(L.index(), "run_chowla idx"));
    row.normalizer = S.area() / idx;
    row.avg = row.normalizer.is_zero() ? 0.0
                                       : static_cast<double>(row.raw) / row.normalizer.to_double();
    row.envelope_ratio = std::abs(row.avg) / form.envelope(N);
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
}

ReportRow run_root_number(const ConvexRegion& S, const LatticeCoset& L, i64 N,
                          const EngineOptions& opt) {
    FormSpec f;
    f.kind = FormKind::root_number_family;
    return run_chowla(f, S, L, N, opt);
}

i64 run_progression(const LiouvilleTable& table, i64 x, i64 m, i64 a) {
    if (m < 1) throw std::domain_error("run_progression: modulus must be positive");
    if (x < 0) throw std::domain_error("run_progression: bound must be nonnegative");
    if (x > table.limit)
        throw resource_error("run_progression: bound " + std::to_string(x) +
                             " beyond table limit " + std::to_string(table.limit));
    i64 r = ((a % m) + m) % m;
    i64 n0 = r == 0 ? m : r;
    i64 s = 0;
    for (i64 n = n0; n <= x; n += m) s += table.signs[static_cast<std::size_t>(n)];
    return s;
}

i64 run_short_interval(const LiouvilleTable& table, i64 x, i64 h, i64 m, i64 a) {
    if (h < 0) throw std::domain_error("run_short_interval: window must be nonnegative");
    if (x < 0) throw std::domain_error("run_short_interval: start must be nonnegative");
    if (m < 1) throw std::domain_error("run_short_interval: modulus must be positive");
    i128 end = static_cast<i128>(x) + h;
    if (end > table.limit)
        throw resource_error("run_short_interval: window end " + to_string(end) +
                             " beyond table limit " + std::to_string(table.limit));
    i64 r = ((a % m) + m) % m;
    // First n > x with n = r (mod m).
    i64 n0 = x + 1 + ((r - (x + 1)) % m + m) % m;
    i64 s = 0;
    for (i64 n = n0; n <= x + h; n += m) s += table.signs[static_cast<std::size_t>(n)];
    return s;
}

BvResult run_bv(const LiouvilleTable& table, i64 N, int A) {
    if (N < 2) throw std::domain_error("run_bv: N must be at least 2");
    double ln = std::log(static_cast<double>(N));
    double cap = std::sqrt(static_cast<double>(N)) / std::pow(ln, 2 * A + 6);
    i64 M = static_cast<i64>(std::floor(cap));
    return run_bv_capped(table, N, M);
}

BvResult run_bv_capped(const LiouvilleTable& table, i64 N, i64 M) {
    if (N < 1) throw std::domain_error("run_bv_capped: N must be positive");
    if (N > table.limit)
        throw resource_error("run_bv_capped: N " + std::to_string(N) + " beyond table limit " +
                             std::to_string(table.limit));
    BvResult res;
    res.modulus_cap = std::max<i64>(M, 0);
    i128 total = 0;
    for (i64 m = 1; m <= M; ++m) {
        std::vector<i64> running(static_cast<std::size_t>(m), 0);
        std::vector<i64> peak(static_cast<std::size_t>(m), 0);
        for (i64 n = 1; n <= N; ++n) {
            std::size_t r = static_cast<std::size_t>(n % m);
            running[r] += table.signs[static_cast<std::size_t>(n)];
            peak[r] = std::max(peak[r], std::abs(running[r]));
        }
        total += *std::max_element(peak.begin(), peak.end());
    }
    res.value = checked_i64(total, "run_bv");
    return res;
}

std::vector<DecayLine> decay_report(const std::vector<ReportRow>& rows) {
    if (rows.size() < 2)
        throw std::domain_error("decay_report: at least two grid points are required");
    std::vector<DecayLine> out;
    out.reserve(rows.size());
    for (const ReportRow& r : rows) out.push_back({r.N, r.avg, r.envelope_ratio});
    return out;
}

std::string engine_fingerprint(const EngineOptions& opt) {
    std::string s = "compiler=";
#if defined(__clang__)
    s += "clang-" + std::string(__clang_version__);
#elif defined(__GNUC__)
    s += "gcc-" + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__) + "." +
         std::to_string(__GNUC_PATCHLEVEL__);
#else
    s += "unknown";
#endif
    s += ";table=" + (opt.table ? std::to_string(opt.table->limit) : std::string("none"));
    s += ";threads=" + std::to_string(std::max(1, opt.threads));
    return s;
}

using detail::fmt_double;
using detail::form_from_json;
using detail::form_to_json;
using detail::ojson;

std::string report_to_csv(const ExperimentReport& rep) {
    std::string out = "form,N,raw,count,normalizer,avg,envelope_ratio\n";
    for (const ReportRow& r : rep.rows) {
        out += r.form + "," + std::to_string(r.N) + "," + std::to_string(r.raw) + "," +
               std::to_string(r.count) + "," + r.normalizer.str() + "," + fmt_double(r.avg) + "," +
               fmt_double(r.envelope_ratio) + "\n";
    }
    return out;
}

std::string report_to_json(const ExperimentReport& rep, bool include_timing) {
    ojson j;
    j["form"] = form_to_json(rep.form);
    j["grid"] = rep.grid;
    j["fingerprint"] = rep.fingerprint;
    j["rows"] = ojson::array();
    for (const ReportRow& r : rep.rows) {
        ojson jr;
        jr["form"] = r.form;
        jr["N"] = r.N;
        jr["raw"] = r.raw;
        jr["count"] = r.count;
        jr["normalizer"] = r.normalizer.str();
        jr["avg"] = r.avg;
        jr["envelope_ratio"] = r.envelope_ratio;
        if (include_timing) jr["millis"] = r.millis;
        j["rows"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
    try {
        ojson j = ojson::parse(text);
        ExperimentReport rep;
        rep.form = form_from_json(j.at("form"));
        rep.grid = j.at("grid").get<std::vector<i64>>();
        rep.fingerprint = j.at("fingerprint").get<std::string>();
        for (const auto& jr : j.at("rows")) {
            ReportRow r;
            r.form = jr.at("form").get<std::string>();
            r.N = jr.at("N").get<i64>();
            r.raw = jr.at("raw").get<i64>();
            r.count = jr.at("count").get<i64>();
            r.normalizer = detail::rat_from_string(jr.at("normalizer").get<std::string>());
            r.avg = jr.at("avg").get<double>();
            r.envelope_ratio = jr.at("envelope_ratio").get<double>();
            r.millis = jr.value("millis", i64(0));
            rep.rows.push_back(std::move(r));
        }
        return rep;
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("report: malformed document: ") + e.what());
    }
}

}  // namespace parity
