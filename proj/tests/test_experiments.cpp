#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "parity/experiments.hpp"
#include "parity/scan.hpp"

using namespace parity;

namespace {

const LiouvilleTable& shared_table() {
    static LiouvilleTable t = liouville_table(200000);
    return t;
}

EngineOptions engine() {
    EngineOptions opt;
    opt.table = &shared_table();
    return opt;
}

ConvexRegion sym_box(i64 N) {
    return ConvexRegion::box(Rat(-N), Rat(N), Rat(-N), Rat(N));
}

ConvexRegion pos_box(i64 N) {
    return ConvexRegion::box(Rat(1), Rat(N), Rat(1), Rat(N));
}

}  // namespace

TEST_CASE("spec validation and naming") {
    FormSpec def;
    def.validate();
    CHECK(def.name() == "triple_1_0_0_1_1_1");
    CHECK(!def.coprime_effective());
    def.coprime_filter = true;
    CHECK(def.coprime_effective());

    FormSpec quad;
    quad.kind = FormKind::quad_times_linear;
    quad.validate();
    CHECK(quad.name() == "quadlin_1_0_1_1_2");

    FormSpec tw;
    tw.kind = FormKind::twisted_triple;
    CHECK(tw.coprime_effective());
    CHECK(tw.name() == "twisted_triple");

    FormSpec rn;
    rn.kind = FormKind::root_number_family;
    CHECK(rn.coprime_effective());
    CHECK(rn.name() == "root_number");

    FormSpec trc;
    trc.coprime_filter = true;
    CHECK(trc.name() == "triple_1_0_0_1_1_1_coprime");

    FormSpec bad;
    bad.linear[1] = {0, 0};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    FormSpec sq;
    sq.kind = FormKind::quad_times_linear;
    sq.quad = {1, 0, -1, 1, 2};  // x^2 - y^2 splits
    CHECK_THROWS_AS(sq.validate(), std::domain_error);
    FormSpec zl;
    zl.kind = FormKind::quad_times_linear;
    zl.quad = {1, 0, 1, 0, 0};
    CHECK_THROWS_AS(zl.validate(), std::domain_error);
}

TEST_CASE("factor bounds and envelopes") {
    FormSpec def;
    CHECK(def.factor_bound(10, 20) == 30);  // row (1,1) dominates
    FormSpec quad;
    quad.kind = FormKind::quad_times_linear;
    CHECK(quad.factor_bound(10, 10) == 200);  // x^2 + y^2 at (10, 10)
    CHECK(def.envelope(100) > def.envelope(10000));
    CHECK(def.envelope(1000) > 0.0);
    CHECK_THROWS_AS(def.envelope(2), std::domain_error);
}

TEST_CASE("triple product sums over positive boxes") {
    EngineOptions opt = engine();
    FormSpec def;
    struct Point { i64 N, raw; };
    for (Point p : {Point{4, -4}, Point{16, 20}, Point{50, 40}, Point{200, -24}, Point{256, 162}}) {
        ReportRow row = run_chowla(def, pos_box(p.N), LatticeCoset(), p.N, opt);
        CHECK(row.raw == p.raw);
        CHECK(row.N == p.N);
        CHECK(row.count == p.N * p.N);
        CHECK(row.normalizer == Rat((p.N - 1) * (p.N - 1)));
        CHECK(row.avg == doctest::Approx(static_cast<double>(p.raw) /
                                         static_cast<double>((p.N - 1) * (p.N - 1))));
    }
}

TEST_CASE("triple product agrees with a direct double loop") {
    EngineOptions opt = engine();
    FormSpec def;
    const i64 N = 30;
    ReportRow row = run_chowla(def, sym_box(N), LatticeCoset(), N, opt);
    i64 brute = 0;
    for (i64 x = -N; x <= N; ++x)
        for (i64 y = -N; y <= N; ++y)
            brute += liouville(x) * liouville(y) * liouville(x + y);
    CHECK(row.raw == brute);
}

TEST_CASE("quadratic-times-linear sums") {
    EngineOptions opt = engine();
    FormSpec quad;
    quad.kind = FormKind::quad_times_linear;
    CHECK(run_chowla(quad, pos_box(50), LatticeCoset(), 50, opt).raw == 24);
    CHECK(run_chowla(quad, pos_box(256), LatticeCoset(), 256, opt).raw == 32);
    // Cross-check one scale directly.
    i64 brute = 0;
    for (i64 x = 1; x <= 50; ++x)
        for (i64 y = 1; y <= 50; ++y)
            brute += liouville(x * x + y * y) * liouville(x + 2 * y);
    CHECK(brute == 24);
}

TEST_CASE("twisted products respect the symbol and the coprime filter") {
    EngineOptions opt = engine();
    FormSpec tw;
    tw.kind = FormKind::twisted_triple;
    ReportRow row = run_chowla(tw, pos_box(50), LatticeCoset(), 50, opt);
    CHECK(row.raw == 182);
}

TEST_CASE("root-number family") {
    EngineOptions opt = engine();
    ConvexRegion tiny = ConvexRegion::box(Rat(1), Rat(3), Rat(1), Rat(3));
    ReportRow row = run_root_number(tiny, LatticeCoset(), 3, opt);
    // W(1,2) + W(2,1) + W(2,3) + W(3,2) + W(1,3) + W(3,1) = 4 - 2.
    CHECK(row.raw == 2);

    FormSpec rn;
    rn.kind = FormKind::root_number_family;
    ReportRow same = run_chowla(rn, tiny, LatticeCoset(), 3, opt);
    CHECK(same.raw == row.raw);

    CHECK(run_root_number(pos_box(256), LatticeCoset(), 256, opt).raw == -10);
}

TEST_CASE("coprime filter changes the count") {
    EngineOptions opt = engine();
    FormSpec def;
    ReportRow all = run_chowla(def, sym_box(20), LatticeCoset(), 20, opt);
    def.coprime_filter = true;
    ReportRow cop = run_chowla(def, sym_box(20), LatticeCoset(), 20, opt);
    i64 brute = 0;
    for (i64 x = -20; x <= 20; ++x)
        for (i64 y = -20; y <= 20; ++y)
            if (std::gcd(x, y) == 1) brute += liouville(x) * liouville(y) * liouville(x + y);
    CHECK(cop.raw == brute);
    CHECK(cop.raw != all.raw);
    CHECK(cop.count == all.count);  // count is geometric, not filtered
}

TEST_CASE("restricting to a coset") {
    EngineOptions opt = engine();
    FormSpec def;
    LatticeCoset checker = LatticeCoset::from_generators({{2, 0}, {1, 1}}, {0, 0});
    const i64 N = 25;
    ReportRow row = run_chowla(def, sym_box(N), checker, N, opt);
    i64 brute = 0, pts = 0;
    for (i64 x = -N; x <= N; ++x)
        for (i64 y = -N; y <= N; ++y) {
            if ((x + y) % 2 != 0) continue;
            ++pts;
            brute += liouville(x) * liouville(y) * liouville(x + y);
        }
    CHECK(row.raw == brute);
    CHECK(row.count == pts);
    CHECK(row.normalizer == Rat(4 * N * N, 2));
}

TEST_CASE("thread count does not change results") {
    FormSpec def;
    EngineOptions serial = engine();
    EngineOptions par = engine();
    par.threads = 4;
    ReportRow a = run_chowla(def, sym_box(200), LatticeCoset(), 200, serial);
    ReportRow b = run_chowla(def, sym_box(200), LatticeCoset(), 200, par);
    CHECK(a.raw == b.raw);
    CHECK(a.count == b.count);
    CHECK(a.avg == b.avg);
}

TEST_CASE("missing table is a caller error") {
    EngineOptions opt;  // no table
    FormSpec def;
    CHECK_THROWS_AS(run_chowla(def, sym_box(4), LatticeCoset(), 4, opt), std::domain_error);
}

TEST_CASE("table overflow honors the fallback switch") {
    LiouvilleTable small = liouville_table(10);
    EngineOptions opt;
    opt.table = &small;
    opt.allow_factor_fallback = false;
    FormSpec def;
    CHECK_THROWS_AS(run_chowla(def, sym_box(20), LatticeCoset(), 20, opt), resource_error);
    opt.allow_factor_fallback = true;
    ReportRow row = run_chowla(def, sym_box(20), LatticeCoset(), 20, opt);
    ReportRow full = run_chowla(def, sym_box(20), LatticeCoset(), 20, engine());
    CHECK(row.raw == full.raw);
}

TEST_CASE("progression and short-interval sums") {
    const LiouvilleTable& t = shared_table();
    // sum over 101..110 of lambda = -6.
    CHECK(run_short_interval(t, 100, 10, 1, 0) == -6);
    i64 direct = 0;
    for (i64 n = 2; n <= 1000; n += 3) direct += t.at(n);
    CHECK(run_progression(t, 1000, 3, 2) == direct);
    CHECK(run_progression(t, 10, 2, 0) == 1);  // 4, 6, 8, 10 -> +1+1-1+1
    CHECK_THROWS_AS(run_progression(t, 300000, 1, 0), resource_error);
    CHECK_THROWS_AS(run_progression(t, 100, 0, 0), std::domain_error);
}

TEST_CASE("modulus-aggregated maxima") {
    const LiouvilleTable& t = shared_table();
    BvResult zero = run_bv(t, 10000, 0);
    CHECK(zero.modulus_cap == 0);
    CHECK(zero.value == 0);

    CHECK(run_bv_capped(t, 10000, 1).value == 128);
    CHECK(run_bv_capped(t, 10000, 30).value == 2219);

    // Direct recomputation at a small cap.
    const i64 N = 3000, M = 15;
    BvResult fast = run_bv_capped(t, N, M);
    i64 brute = 0;
    for (i64 m = 1; m <= M; ++m) {
        i64 best = 0;
        for (i64 a = 0; a < m; ++a) {
            i64 run = 0;
            for (i64 x = 1; x <= N; ++x) {
                if (x % m == a) run += t.at(x);
                i64 mag = run < 0 ? -run : run;
                if (mag > best) best = mag;
            }
        }
        brute += best;
    }
    CHECK(fast.value == brute);
    CHECK(fast.modulus_cap == M);
}

TEST_CASE("decay tables") {
    std::vector<ReportRow> rows(3);
    rows[0].N = 100;
    rows[0].avg = 0.5;
    rows[0].envelope_ratio = 1.25;
    rows[1].N = 200;
    rows[1].avg = -0.25;
    rows[1].envelope_ratio = 0.8;
    rows[2].N = 400;
    rows[2].avg = 0.05;
    rows[2].envelope_ratio = 0.2;
    auto lines = decay_report(rows);
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].N == rows[i].N);
        CHECK(lines[i].avg == rows[i].avg);
        CHECK(lines[i].ratio == rows[i].envelope_ratio);
    }
    CHECK_THROWS_AS(decay_report({rows[0]}), std::domain_error);
}

TEST_CASE("serialization round trip") {
    EngineOptions opt = engine();
    FormSpec def;
    ExperimentReport rep;
    rep.form = def;
    rep.grid = {16, 50};
    rep.fingerprint = engine_fingerprint(opt);
    for (i64 N : rep.grid) rep.rows.push_back(run_chowla(def, sym_box(N), LatticeCoset(), N, opt));

    std::string js = report_to_json(rep, false);
    ExperimentReport back = report_from_json(js);
    CHECK(back.grid == rep.grid);
    CHECK(back.fingerprint == rep.fingerprint);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].raw == rep.rows[i].raw);
        CHECK(back.rows[i].count == rep.rows[i].count);
        CHECK(back.rows[i].avg == rep.rows[i].avg);
        CHECK(back.rows[i].millis == 0);  // timing excluded
    }
    CHECK(report_to_json(back, false) == js);  // canonical form is stable

    std::string csv = report_to_csv(rep);
    CHECK(csv.find("form,N,raw,count") != std::string::npos);
    CHECK(csv.find("triple_1_0_0_1_1_1") != std::string::npos);

    std::string timed = report_to_json(rep, true);
    CHECK(timed.find("millis") != std::string::npos);
    CHECK(js.find("millis") == std::string::npos);
}

TEST_CASE("fingerprints name the execution environment") {
    EngineOptions opt = engine();
    std::string fp = engine_fingerprint(opt);
    CHECK(fp.find("compiler=") != std::string::npos);
    CHECK(fp.find("table=200000") != std::string::npos);
    CHECK(fp.find("threads=1") != std::string::npos);
}
