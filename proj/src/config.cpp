#include "parity/config.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_detail.hpp"

namespace parity {

using detail::ojson;

ConvexRegion RegionSpec::at_scale(i64 N) const {
    if (N < 1) throw std::domain_error("region: scale must be positive");
    switch (kind) {
        case RegionKind::sym_box:
            return ConvexRegion::box(Rat(-N), Rat(N), Rat(-N), Rat(N));
        case RegionKind::pos_box:
            return ConvexRegion::box(Rat(1), Rat(N), Rat(1), Rat(N));
        case RegionKind::polygon: {
            ConvexRegion base(vertices);
            return scale_by_n ? base.scaled(Rat(N)) : base;
        }
    }
    throw std::domain_error("region: unknown kind");
}

void ExperimentConfig::validate() const {
    form.validate();
    if (region.kind == RegionKind::polygon) {
        if (region.vertices.empty())
            throw std::domain_error("config: polygon region needs vertices");
        region.at_scale(1);  // vertex validation happens in the constructor
    }
    if (grid.empty()) throw std::domain_error("config: grid must not be empty");
    for (i64 n : grid)
        if (n < 3) throw std::domain_error("config: grid scales must be at least 3");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw std::domain_error("config: grid must be strictly increasing");
    if (table_limit < 0) throw std::domain_error("config: table_limit must be nonnegative");
    if (threads < 0) throw std::domain_error("config: threads must be nonnegative");
    coset();  // basis validation happens in the constructor
}

i64 ExperimentConfig::required_table_limit() const {
    if (table_limit > 0) return table_limit;
    if (form.kind == FormKind::root_number_family) return 0;
    i128 need = 0;
    for (i64 n : grid) {
        ConvexRegion S = region.at_scale(n);
        if (S.empty()) continue;
        auto bb = S.bbox();
        i64 bx = std::max(bb.xmin.abs().ceil(), bb.xmax.abs().ceil());
        i64 by = std::max(bb.ymin.abs().ceil(), bb.ymax.abs().ceil());
        need = std::max(need, form.factor_bound(bx, by));
    }
    return checked_i64(need, "config: required table limit");
}

namespace {

std::string region_kind_name(RegionKind k) {
    switch (k) {
        case RegionKind::sym_box: return "sym_box";
        case RegionKind::pos_box: return "pos_box";
        case RegionKind::polygon: return "polygon";
    }
    return "sym_box";
}

RegionKind region_kind_from(const std::string& s) {
    if (s == "sym_box") return RegionKind::sym_box;
    if (s == "pos_box") return RegionKind::pos_box;
    if (s == "polygon") return RegionKind::polygon;
    throw std::domain_error("config: unknown region kind '" + s + "'");
}

Rat rat_from_node(const ojson& j) {
    if (j.is_number_integer()) return Rat(j.get<i64>());
    if (j.is_string()) return detail::rat_from_string(j.get<std::string>());
    throw std::domain_error("config: rational values must be integers or \"p/q\" strings");
}

void check_keys(const ojson& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) ok = true;
        if (!ok) throw std::domain_error("config: unknown key '" + item.key() + "' in " + where);
    }
}

}  // namespace

namespace {
ExperimentConfig config_from_parsed(const ojson& j);
}

ExperimentConfig config_from_json(const std::string& text) {
    try {
        return config_from_parsed(ojson::parse(text));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("config: malformed document: ") + e.what());
    }
}

namespace {
ExperimentConfig config_from_parsed(const ojson& j) {
    if (!j.is_object()) throw std::domain_error("config: document must be an object");
    check_keys(j, {"form", "region", "coset", "grid", "table_limit", "threads"}, "config");

    ExperimentConfig cfg;
    if (j.contains("form")) cfg.form = detail::form_from_json(j.at("form"));
    if (j.contains("region")) {
        const ojson& r = j.at("region");
        check_keys(r, {"kind", "vertices", "scale_by_N"}, "region");
        cfg.region.kind = region_kind_from(r.value("kind", std::string("sym_box")));
        if (r.contains("vertices")) {
            for (const auto& v : r.at("vertices")) {
                if (!v.is_array() || v.size() != 2)
                    throw std::domain_error("config: each vertex must be an [x, y] pair");
                cfg.region.vertices.push_back({rat_from_node(v[0]), rat_from_node(v[1])});
            }
        }
        cfg.region.scale_by_n = r.value("scale_by_N", true);
    }
    if (j.contains("coset")) {
        const ojson& c = j.at("coset");
        check_keys(c, {"basis", "offset"}, "coset");
        if (c.contains("basis")) {
            const auto& b = c.at("basis");
            if (b.size() != 4)
                throw std::domain_error("config: coset basis needs 4 entries [a, b, c, d]");
            cfg.coset_basis = {b[0].get<i64>(), b[1].get<i64>(), b[2].get<i64>(), b[3].get<i64>()};
        }
        if (c.contains("offset")) {
            const auto& o = c.at("offset");
            if (o.size() != 2) throw std::domain_error("config: coset offset needs 2 entries");
            cfg.coset_offset = {o[0].get<i64>(), o[1].get<i64>()};
        }
    }
    if (j.contains("grid")) cfg.grid = j.at("grid").get<std::vector<i64>>();
    cfg.table_limit = j.value("table_limit", i64(0));
    cfg.threads = j.value("threads", 0);
    cfg.validate();
    return cfg;
}
}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
    ojson j;
    j["form"] = detail::form_to_json(cfg.form);
    ojson r;
    r["kind"] = region_kind_name(cfg.region.kind);
    if (cfg.region.kind == RegionKind::polygon) {
        r["vertices"] = ojson::array();
        for (const RatPoint& p : cfg.region.vertices)
            r["vertices"].push_back({p.x.str(), p.y.str()});
        r["scale_by_N"] = cfg.region.scale_by_n;
    }
    j["region"] = std::move(r);
    ojson c;
    c["basis"] = {cfg.coset_basis.a, cfg.coset_basis.b, cfg.coset_basis.c, cfg.coset_basis.d};
    c["offset"] = {cfg.coset_offset.x, cfg.coset_offset.y};
    j["coset"] = std::move(c);
    j["grid"] = cfg.grid;
    j["table_limit"] = cfg.table_limit;
    j["threads"] = cfg.threads;
    return j.dump(2) + "\n";
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const EngineOptions& opt) {
    cfg.validate();
    ExperimentReport rep;
    rep.form = cfg.form;
    rep.grid = cfg.grid;
    rep.fingerprint = engine_fingerprint(opt);
    LatticeCoset L = cfg.coset();
    for (i64 n : cfg.grid) {
        ConvexRegion S = cfg.region.at_scale(n);
        rep.rows.push_back(run_chowla(cfg.form, S, L, n, opt));
    }
    return rep;
}

}  // namespace parity
