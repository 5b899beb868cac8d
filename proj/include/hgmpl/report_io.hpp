#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "identities.hpp"

namespace hgmpl {

inline std::string to_json_line(const IdentityReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["deviation"] = static_cast<double>(r.deviation);
    j["budget"] = static_cast<double>(r.budget);
    j["pass"] = r.pass;
    j["wall_ms"] = r.wall_ms;
    return j.dump();
}

inline IdentityReport parse_json_line(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.deviation = static_cast<long double>(j.at("deviation").get<double>());
    r.budget = static_cast<long double>(j.at("budget").get<double>());
    r.pass = j.at("pass").get<bool>();
    r.wall_ms = j.at("wall_ms").get<long long>();
    return r;
}

inline void sort_reports(std::vector<IdentityReport>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.identity != b.identity) return a.identity < b.identity;
        return a.params < b.params;
    });
}

inline std::string format_table(const std::vector<IdentityReport>& rs) {
    std::size_t wid = 8, wpar = 6;
    for (const IdentityReport& r : rs) {
        wid = std::max(wid, r.identity.size());
        wpar = std::max(wpar, r.params.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(wid) + 2) << "identity"
       << std::setw(static_cast<int>(wpar) + 2) << "params" << std::right << std::setw(13)
       << "deviation" << std::setw(13) << "budget"
       << "  result" << std::setw(9) << "ms" << '\n';
    for (const IdentityReport& r : rs) {
        std::ostringstream dev, bud;
        dev << std::scientific << std::setprecision(3) << static_cast<double>(r.deviation);
        bud << std::scientific << std::setprecision(3) << static_cast<double>(r.budget);
        os << std::left << std::setw(static_cast<int>(wid) + 2) << r.identity
           << std::setw(static_cast<int>(wpar) + 2) << r.params << std::right << std::setw(13)
           << dev.str() << std::setw(13) << bud.str() << "  " << (r.pass ? "pass  " : "FAIL  ")
           << std::setw(9) << r.wall_ms << '\n';
    }
    return os.str();
}

} // namespace hgmpl
