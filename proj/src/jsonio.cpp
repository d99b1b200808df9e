#include "klrcalc/jsonio.hpp"

#include <stdexcept>

namespace klrcalc {

using nlohmann::json;

json complex_json(const ProjComplex& c) {
    json levels = json::array();
    for (auto& lev : c.levels) {
        json row = json::array();
        for (auto& s : lev) {
            json idem = json::array();
            for (auto& [i, k] : s.idem.parts) idem.push_back({i, k});
            row.push_back({{"shift", s.shift}, {"idem", idem}});
        }
        levels.push_back(row);
    }
    json bnds = json::array();
    for (auto& mat : c.boundaries) {
        json entries = json::array();
        for (auto& [key, e] : mat)
            entries.push_back({{"row", key.first},
                               {"col", key.second},
                               {"element", to_string(e)}});
        bnds.push_back(entries);
    }
    return {{"levels", levels}, {"boundaries", bnds}};
}

json ext_json(const std::vector<ExtEntry>& table) {
    json out = json::array();
    for (auto& e : table) {
        json tors = json::array();
        for (auto& f : e.torsion) tors.push_back(f.get_str());
        out.push_back({{"n", e.n},
                       {"degree", e.degree},
                       {"rank", e.rank},
                       {"torsion", tors}});
    }
    return out;
}

json character_json(const Character& ch) {
    json out = json::array();
    for (auto& [w, qp] : ch.coeffs)
        for (auto& [deg, dim] : qp) {
            if (dim == 0 || deg > ch.cutoff) continue;
            out.push_back({{"word", w}, {"degree", deg}, {"dim", dim}});
        }
    return out;
}

json report_json(const std::string& check, const json& params, bool ok,
                 const std::vector<std::string>& witnesses) {
    return {{"check", check},
            {"params", params},
            {"status", ok ? "pass" : "fail"},
            {"witnesses", witnesses}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

Root parse_root(const std::string& s) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.size() != 2 ||
        !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("expected a root of the form [lo,hi]");
    return Root(j[0].get<int>(), j[1].get<int>());
}

KostantPartition parse_partition(const std::string& s) {
    std::string t = s;
    if (t.rfind("[[[", 0) != 0) t = "[" + t + "]";
    json j = json::parse(t, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::invalid_argument(
            "expected a partition of the form [[lo,hi],mult],...");
    KostantPartition p;
    for (auto& part : j) {
        if (!part.is_array() || part.size() != 2 || !part[0].is_array() ||
            part[0].size() != 2 || !part[1].is_number_integer())
            throw std::invalid_argument(
                "expected a partition of the form [[lo,hi],mult],...");
        p.parts.emplace_back(Root(part[0][0].get<int>(), part[0][1].get<int>()),
                             part[1].get<int>());
    }
    p.validate();
    return p;
}

}  // namespace klrcalc
