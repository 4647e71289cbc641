#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "parity/config.hpp"

using namespace parity;

TEST_CASE("defaults and canonical serialization round trip") {
    ExperimentConfig cfg;
    cfg.validate();
    std::string once = config_to_json(cfg);
    ExperimentConfig back = config_from_json(once);
    std::string twice = config_to_json(back);
    CHECK(once == twice);
    CHECK(back.grid == std::vector<i64>{64});
    CHECK(back.form.kind == FormKind::triple_linear);
    CHECK(back.region.kind == RegionKind::sym_box);
    CHECK(back.coset_basis == Mat2{1, 0, 0, 1});
    CHECK(back.table_limit == 0);
    CHECK(back.threads == 0);
}

TEST_CASE("round trip preserves every field") {
    ExperimentConfig cfg;
    cfg.form.kind = FormKind::quad_times_linear;
    cfg.form.quad = {2, 1, 3, 1, -1};
    cfg.form.coprime_filter = true;
    cfg.region.kind = RegionKind::polygon;
    cfg.region.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1, 2), Rat(3, 4)}};
    cfg.region.scale_by_n = false;
    cfg.coset_basis = Mat2{2, 0, 1, 1};
    cfg.coset_offset = Vec2{1, 0};
    cfg.grid = {8, 32, 64};
    cfg.table_limit = 5000;
    cfg.threads = 3;
    cfg.validate();

    ExperimentConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.form.kind == cfg.form.kind);
    CHECK(back.form.quad == cfg.form.quad);
    CHECK(back.form.coprime_filter);
    CHECK(back.region.kind == RegionKind::polygon);
    CHECK(back.region.vertices == cfg.region.vertices);
    CHECK(back.region.scale_by_n == false);
    CHECK(back.coset_basis == cfg.coset_basis);
    CHECK(back.coset_offset == cfg.coset_offset);
    CHECK(back.grid == cfg.grid);
    CHECK(back.table_limit == 5000);
    CHECK(back.threads == 3);
    CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("partial documents take defaults") {
    ExperimentConfig cfg = config_from_json(R"({"grid": [10, 20]})");
    CHECK(cfg.grid == std::vector<i64>{10, 20});
    CHECK(cfg.form.kind == FormKind::triple_linear);
    CHECK(cfg.region.kind == RegionKind::sym_box);
    CHECK(cfg.coset().index() == 1);
}

TEST_CASE("regions at scale") {
    RegionSpec sym;
    CHECK(sym.at_scale(10).area() == Rat(400));
    CHECK(sym.at_scale(10).contains(RatPoint{Rat(-10), Rat(10)}));

    RegionSpec pos;
    pos.kind = RegionKind::pos_box;
    CHECK(pos.at_scale(10).area() == Rat(81));
    CHECK(pos.at_scale(10).contains(RatPoint{Rat(1), Rat(1)}));
    CHECK(!pos.at_scale(10).contains(RatPoint{Rat(0), Rat(5)}));

    RegionSpec poly;
    poly.kind = RegionKind::polygon;
    poly.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(poly.at_scale(4).area() == Rat(8));  // scaled by N in both axes
    poly.scale_by_n = false;
    CHECK(poly.at_scale(4).area() == Rat(1, 2));

    CHECK_THROWS_AS(sym.at_scale(0), std::domain_error);
}

TEST_CASE("validation rejects bad configurations") {
    auto reject = [](void (*tweak)(ExperimentConfig&)) {
        ExperimentConfig cfg;
        tweak(cfg);
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    };
    reject([](ExperimentConfig& c) { c.grid.clear(); });
    reject([](ExperimentConfig& c) { c.grid = {2}; });
    reject([](ExperimentConfig& c) { c.grid = {10, 10}; });
    reject([](ExperimentConfig& c) { c.grid = {20, 10}; });
    reject([](ExperimentConfig& c) { c.table_limit = -1; });
    reject([](ExperimentConfig& c) { c.threads = -1; });
    reject([](ExperimentConfig& c) { c.region.kind = RegionKind::polygon; });
    reject([](ExperimentConfig& c) { c.coset_basis = Mat2{1, 2, 2, 4}; });
    reject([](ExperimentConfig& c) { c.form.linear[0] = {0, 0}; });
}

TEST_CASE("parser rejects malformed documents with precise messages") {
    auto rejects = [](const std::string& text) {
        CHECK_THROWS_AS(config_from_json(text), std::domain_error);
    };
    rejects("{");                                       // truncated
    rejects("[1, 2]");                                  // not an object
    rejects(R"({"bogus": 1})");                          // unknown key
    rejects(R"({"region": {"kind": "circle"}})");        // unknown region kind
    rejects(R"({"region": {"radius": 3}})");             // unknown region key
    rejects(R"({"region": {"kind": "polygon", "vertices": [[1]]}})");
    rejects(R"({"coset": {"basis": [1, 0, 0]}})");       // 3-entry basis
    rejects(R"({"coset": {"offset": [1, 2, 3]}})");      // 3-entry offset
    rejects(R"({"coset": {"angle": 1}})");               // unknown coset key
    rejects(R"({"form": {"kind": "cubic"}})");           // unknown form kind
    rejects(R"({"form": {"kind": "triple_linear", "rows": [[1, 0], [0, 1]]}})");
    rejects(R"({"form": {"kind": "quad_times_linear", "coeffs": [1, 0, 1]}})");
    rejects(R"({"grid": "all"})");                       // wrong type
    rejects(R"({"grid": [3, 4, 4]})");                   // fails validation
    rejects(R"({"region": {"kind": "polygon", "vertices": [["1/0", 2], [3, 4], [5, 6]]}})");
}

TEST_CASE("table sizing from the declared runs") {
    ExperimentConfig cfg;
    CHECK(cfg.required_table_limit() == 128);  // (1,1) row at (64, 64)

    cfg.table_limit = 777;
    CHECK(cfg.required_table_limit() == 777);

    ExperimentConfig rn;
    rn.form.kind = FormKind::root_number_family;
    CHECK(rn.required_table_limit() == 0);

    ExperimentConfig quad;
    quad.form.kind = FormKind::quad_times_linear;
    quad.grid = {10};
    CHECK(quad.required_table_limit() == 200);  // x^2 + y^2 at (10, 10)
}

TEST_CASE("configured runs match direct engine calls") {
    ExperimentConfig cfg;
    cfg.region.kind = RegionKind::pos_box;
    cfg.grid = {4, 16};
    cfg.validate();
    LiouvilleTable table = liouville_table(cfg.required_table_limit());
    EngineOptions opt;
    opt.table = &table;
    ExperimentReport rep = run_experiment(cfg, opt);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].raw == -4);
    CHECK(rep.rows[1].raw == 20);
    CHECK(rep.grid == cfg.grid);
    CHECK(rep.fingerprint == engine_fingerprint(opt));
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        i64 N = cfg.grid[i];
        ReportRow direct = run_chowla(cfg.form, cfg.region.at_scale(N), cfg.coset(), N, opt);
        CHECK(rep.rows[i].raw == direct.raw);
        CHECK(rep.rows[i].count == direct.count);
    }
}
