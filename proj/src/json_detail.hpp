#pragma once

// Internal JSON helpers shared by the serialization units.  Not installed;
// keeps the vendored json header out of the public interface.

#include <cstdio>
#include <stdexcept>
#include <string>

#include "parity/experiments.hpp"
#include "parity/rational.hpp"

#include "json.hpp"

namespace parity::detail {

using ojson = nlohmann::ordered_json;

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(checked_i64(parse_i128(s), "rational"));
    return Rat(checked_i64(parse_i128(s.substr(0, slash)), "rational"),
               checked_i64(parse_i128(s.substr(slash + 1)), "rational"));
}

inline ojson form_to_json(const FormSpec& f) {
    ojson j;
    switch (f.kind) {
        case FormKind::triple_linear:
            j["kind"] = "triple_linear";
            j["rows"] = {{f.linear[0][0], f.linear[0][1]},
                         {f.linear[1][0], f.linear[1][1]},
                         {f.linear[2][0], f.linear[2][1]}};
            break;
        case FormKind::quad_times_linear:
            j["kind"] = "quad_times_linear";
            j["coeffs"] = {f.quad[0], f.quad[1], f.quad[2], f.quad[3], f.quad[4]};
            break;
        case FormKind::twisted_triple:
            j["kind"] = "twisted_triple";
            break;
        case FormKind::root_number_family:
            j["kind"] = "root_number_family";
            break;
    }
    j["coprime"] = f.coprime_effective();
    return j;
}

inline FormSpec form_from_json(const ojson& j) {
    FormSpec f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "triple_linear") {
        f.kind = FormKind::triple_linear;
        const auto& rows = j.at("rows");
        if (rows.size() != 3) throw std::domain_error("form: expected 3 linear rows");
        for (int i = 0; i < 3; ++i) {
            if (rows[i].size() != 2) throw std::domain_error("form: linear row needs 2 entries");
            f.linear[i][0] = rows[i][0].get<i64>();
            f.linear[i][1] = rows[i][1].get<i64>();
        }
    } else if (kind == "quad_times_linear") {
        f.kind = FormKind::quad_times_linear;
        const auto& cs = j.at("coeffs");
        if (cs.size() != 5) throw std::domain_error("form: expected 5 coefficients");
        for (int i = 0; i < 5; ++i) f.quad[i] = cs[i].get<i64>();
    } else if (kind == "twisted_triple") {
        f.kind = FormKind::twisted_triple;
    } else if (kind == "root_number_family") {
        f.kind = FormKind::root_number_family;
    } else {
        throw std::domain_error("form: unknown kind '" + kind + "'");
    }
    f.coprime_filter = j.value("coprime", false);
    f.validate();
    return f;
}

}  // namespace parity::detail
