#include "spinecensus/io.hpp"

#include <cstdio>

#include "spinecensus/errors.hpp"

namespace spinecensus::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed ") + what + " record: " + e.what());
    }
}

template <typename T>
Json optional_value(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string format_double(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

template <typename T>
std::string csv_field(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, double>) {
        return format_double(*v);
    } else if constexpr (std::is_same_v<T, bool>) {
        return *v ? "true" : "false";
    } else {
        return std::to_string(*v);
    }
}

} // namespace

Json parse(const std::string& text) {
    return guarded("JSON", [&] { return Json::parse(text); });
}

Json to_json(const RegularGraph& g) {
    Json pairs = Json::array();
    for (auto [a, b] : g.pairs()) pairs.push_back({a, b});
    return {{"n", g.vertex_count()}, {"pairs", pairs}};
}

RegularGraph graph_from_json(const Json& j) {
    return guarded("graph", [&] {
        std::vector<DartPair> pairs;
        for (const auto& p : j.at("pairs")) {
            if (p.size() != 2) throw ValidationError("a dart pair needs two entries");
            pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
        return RegularGraph::build(j.at("n").get<int>(), pairs);
    });
}

Json to_json(const Spine& s) {
    return {{"graph", to_json(s.graph())}, {"chirality", s.chirality()}, {"gluing", s.gluing()}};
}

Spine spine_from_json(const Json& j) {
    return guarded("spine", [&] {
        return Spine::build(graph_from_json(j.at("graph")), j.at("chirality").get<std::vector<int>>(),
                            j.at("gluing").get<std::vector<int>>());
    });
}

Json to_json(const CellDecomposition& d) {
    Json cells = Json::array();
    for (const auto& cell : d.cells) {
        Json boundary = Json::array();
        for (const auto& t : cell) boundary.push_back({t.edge, t.direction, t.page});
        cells.push_back(std::move(boundary));
    }
    return {{"cells", cells}};
}

Json to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step{{"edge", s.edge}, {"turns", s.turns}, {"before", s.before}, {"after", s.after}, {"rule", s.rule}};
        if (s.vertex >= 0) step["vertex"] = s.vertex;
        steps.push_back(std::move(step));
    }
    return {{"steps", steps}};
}

ReductionTrace trace_from_json(const Json& j) {
    return guarded("trace", [&] {
        ReductionTrace t;
        for (const auto& s : j.at("steps")) {
            t.steps.push_back({s.at("edge").get<int>(), s.value("turns", 1), s.at("before").get<int>(),
                               s.at("after").get<int>(), s.at("rule").get<std::string>(), s.value("vertex", -1)});
        }
        return t;
    });
}

Json to_json(const GluingTable& t) {
    Json gluings = Json::array();
    for (const auto& g : t.gluings()) gluings.push_back({g.tet, g.face, g.other_tet, g.other_face, g.matching});
    return {{"schema_version", kSchemaVersion}, {"tets", t.tet_count()}, {"orientation", t.orientation()},
            {"gluings", gluings}};
}

GluingTable table_from_json(const Json& j) {
    return guarded("gluing table", [&] {
        const int tets = j.at("tets").get<int>();
        std::vector<int> orientation = j.contains("orientation") ? j.at("orientation").get<std::vector<int>>()
                                                                 : std::vector<int>(tets > 0 ? tets : 0, 1);
        std::vector<FaceGluing> gluings;
        for (const auto& g : j.at("gluings")) {
            if (g.size() != 5) throw ValidationError("a gluing entry needs five integers");
            gluings.push_back({g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<int>(), g.at(3).get<int>(),
                               g.at(4).get<int>()});
        }
        return GluingTable::build(tets, std::move(orientation), std::move(gluings));
    });
}

Json to_json(const CensusRecord& r) {
    return {{"schema_version", kSchemaVersion}, {"n", r.n}, {"graph_code", r.graph_code.hex()},
            {"spine_code", r.spine_code.hex()}, {"cell_count", r.cell_count}, {"spine", to_json(r.spine)}};
}

CensusRecord census_record_from_json(const Json& j) {
    return guarded("census", [&] {
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw ValidationError("unsupported census schema version");
        }
        Spine spine = spine_from_json(j.at("spine"));
        CensusRecord r{CanonicalCode::from_hex(j.at("graph_code").get<std::string>()),
                       CanonicalCode::from_hex(j.at("spine_code").get<std::string>()), j.at("n").get<int>(),
                       j.at("cell_count").get<int>(), spine};
        if (count_cells(spine) != r.cell_count) throw ValidationError("stored cell count does not match the spine");
        if (spine.vertex_count() != r.n) throw ValidationError("stored n does not match the spine");
        if (canonical_spine(spine) != r.spine_code) throw ValidationError("stored spine code does not match the spine");
        if (canonical_form(spine.graph()) != r.graph_code) throw ValidationError("stored graph code does not match");
        return r;
    });
}

Json to_json(const Anomaly& a) {
    Json j{{"kind", a.kind}, {"detail", a.detail}};
    j["graph"] = a.graph ? to_json(*a.graph) : Json(nullptr);
    j["spine"] = a.spine ? to_json(*a.spine) : Json(nullptr);
    return j;
}

Json to_json(const BoundsRow& row) {
    return {
        {"n", row.n},
        {"count_A", optional_value(row.count_A)},
        {"count_C", optional_value(row.count_C)},
        {"ln_A", optional_value(row.ln_A)},
        {"ln_C", optional_value(row.ln_C)},
        {"bollobas_ln", row.bollobas_ln},
        {"lower_ln_Mn", optional_value(row.lower_ln_Mn)},
        {"lower_estimated", row.lower_estimated},
        {"upper_ln_Mn_theorem", optional_value(row.upper_ln_Mn_theorem)},
        {"upper_route", row.upper_route},
        {"upper_estimated", row.upper_estimated},
        {"upper_ln_Mn_intro", row.upper_ln_Mn_intro},
        {"lower_ln_Mn_intro", row.lower_ln_Mn_intro},
        {"theorem_constant", kTheoremUpperConstant},
        {"intro_constant", kIntroUpperConstant},
        {"constants_disagree", true},
        {"ln_C_over_A", optional_value(row.ln_C_over_A)},
        {"ln_C_over_A_bound", row.ln_C_over_A_bound},
        {"ln_C_over_A_ok", optional_value(row.ln_C_over_A_ok)},
        {"ordered", row.ordered()},
    };
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
    std::string out =
        "n,count_A,count_C,ln_A,ln_C,bollobas_ln,lower_ln_Mn,lower_estimated,upper_ln_Mn_theorem,upper_route,"
        "upper_estimated,upper_ln_Mn_intro,lower_ln_Mn_intro,theorem_constant,intro_constant,ln_C_over_A,"
        "ln_C_over_A_bound,ln_C_over_A_ok\n";
    for (const auto& r : rows) {
        const std::vector<std::string> fields{
            std::to_string(r.n),
            csv_field(r.count_A),
            csv_field(r.count_C),
            csv_field(r.ln_A),
            csv_field(r.ln_C),
            format_double(r.bollobas_ln),
            csv_field(r.lower_ln_Mn),
            r.lower_estimated ? "estimated" : "exact",
            csv_field(r.upper_ln_Mn_theorem),
            r.upper_route,
            r.upper_estimated ? "estimated" : "exact",
            format_double(r.upper_ln_Mn_intro),
            format_double(r.lower_ln_Mn_intro),
            format_double(kTheoremUpperConstant),
            format_double(kIntroUpperConstant),
            csv_field(r.ln_C_over_A),
            format_double(r.ln_C_over_A_bound),
            csv_field(r.ln_C_over_A_ok),
        };
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += fields[i];
        }
        out += '\n';
    }
    return out;
}

} // namespace spinecensus::io
