#ifndef HOPFALG_JSON_IO_HPP
#define HOPFALG_JSON_IO_HPP

#include <json.hpp>

#include "hopfalg/nichols.hpp"
#include "hopfalg/quiver.hpp"

namespace hopfalg {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Interchange schema:
/// {"schema", "dim", "basis", "unit", "counit",
///  "mult": [[i,j,k,"scalar"]...], "comult": [[i,j,k,"scalar"]...],
///  "antipode": [[i,j,"scalar"]...]}
/// Scalars use the literal format "p/q+r/s*x"; entries are sorted, so the
/// output is bit-stable.
inline json hopf_to_json(const FinDimHopf& h) {
    json j;
    j["schema"] = kSchemaVersion;
    j["dim"] = h.dim;
    j["basis"] = h.basis;
    json unit = json::array(), counit = json::array();
    for (const auto& c : h.unit) unit.push_back(c.str());
    for (const auto& c : h.counit) counit.push_back(c.str());
    j["unit"] = unit;
    j["counit"] = counit;
    json mult = json::array();
    for (const auto& [a, b, k, c] : h.mult.entries()) mult.push_back({a, b, k, c.str()});
    j["mult"] = mult;
    json comult = json::array();
    for (const auto& [a, b, k, c] : h.comult.entries()) comult.push_back({a, b, k, c.str()});
    j["comult"] = comult;
    json antipode = json::array();
    for (size_t r = 0; r < h.dim; ++r)
        for (size_t c = 0; c < h.dim; ++c)
            if (!h.antipode(r, c).is_zero()) antipode.push_back({r, c, h.antipode(r, c).str()});
    j["antipode"] = antipode;
    j["certified"] = h.certified;
    return j;
}

inline FinDimHopf hopf_from_json(const json& j) {
    FinDimHopf h(j.at("dim").get<size_t>());
    h.basis = j.at("basis").get<std::vector<std::string>>();
    for (size_t i = 0; i < h.dim; ++i) {
        h.unit[i] = Scalar::parse(j.at("unit")[i].get<std::string>());
        h.counit[i] = Scalar::parse(j.at("counit")[i].get<std::string>());
    }
    for (const auto& e : j.at("mult"))
        h.mult.add(e[0].get<size_t>(), e[1].get<size_t>(), e[2].get<size_t>(),
                   Scalar::parse(e[3].get<std::string>()));
    for (const auto& e : j.at("comult"))
        h.comult.add(e[0].get<size_t>(), e[1].get<size_t>(), e[2].get<size_t>(),
                     Scalar::parse(e[3].get<std::string>()));
    h.mult.normalize();
    h.comult.normalize();
    for (const auto& e : j.at("antipode"))
        h.antipode(e[0].get<size_t>(), e[1].get<size_t>()) =
            Scalar::parse(e[2].get<std::string>());
    if (j.contains("certified")) h.certified = j.at("certified").get<int>();
    return h;
}

inline json report_to_json(const AxiomReport& rep) {
    json out = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["axiom"] = c.axiom;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (c.informational) e["informational"] = true;
        out.push_back(e);
    }
    return out;
}

inline json nichols_report_to_json(const NicholsReport& rep) {
    json j;
    j["schema"] = kSchemaVersion;
    j["module"] = rep.module_name;
    j["ranks"] = rep.ranks;
    switch (rep.verdict) {
        case NicholsVerdict::finite: j["verdict"] = "finite"; break;
        case NicholsVerdict::infinite: j["verdict"] = "infinite"; break;
        default: j["verdict"] = "undecided"; break;
    }
    if (rep.verdict == NicholsVerdict::finite) {
        j["dim"] = rep.total_dim;
        j["palindromic"] = rep.palindromic;
    }
    if (rep.witness) {
        json w = json::array();
        for (const auto& c : *rep.witness) w.push_back(c.str());
        j["witness"] = w;
        j["witness_note"] = rep.witness_note;
    }
    json kernels = json::array();
    for (size_t n = 0; n < rep.kernels.size(); ++n)
        for (const auto& k : rep.kernels[n]) {
            json entry;
            entry["degree"] = n;
            json coords = json::array();
            for (size_t t = 0; t < k.size(); ++t)
                if (!k[t].is_zero()) coords.push_back({t, k[t].str()});
            entry["coords"] = coords;
            kernels.push_back(entry);
        }
    j["kernels"] = kernels;
    return j;
}

inline json quiver_to_json(const QuiverGraph& q) {
    json j;
    j["schema"] = kSchemaVersion;
    j["vertices"] = q.vertices;
    json arrows = json::array();
    for (const auto& [arrow, mult] : q.arrows)
        arrows.push_back({arrow.first, arrow.second, mult});
    j["arrows"] = arrows;
    json comps = json::array();
    for (const auto& c : q.separated_components()) {
        json e;
        e["vertices"] = c.vertices;
        e["shape"] = c.shape;
        e["class"] = c.cls == GraphClass::dynkin   ? "finite"
                     : c.cls == GraphClass::affine ? "tame"
                                                   : "wild";
        comps.push_back(e);
    }
    j["separated_components"] = comps;
    GraphClass cls = q.overall_class();
    j["classification"] = cls == GraphClass::dynkin   ? "finite"
                          : cls == GraphClass::affine ? "tame"
                                                      : "wild";
    return j;
}

inline std::string quiver_to_dot(const QuiverGraph& q) {
    std::string out = "digraph ext {\n";
    for (size_t v = 0; v < q.vertices.size(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"" + q.vertices[v] + "\"];\n";
    for (const auto& [arrow, mult] : q.arrows)
        for (size_t m = 0; m < mult; ++m)
            out += "  n" + std::to_string(arrow.first) + " -> n" +
                   std::to_string(arrow.second) + ";\n";
    out += "}\n";
    return out;
}

} // namespace hopfalg

#endif
