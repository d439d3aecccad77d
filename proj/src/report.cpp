#include "spinflat/decide.hpp"

#include <json.hpp>

#include <sstream>

namespace spinflat {

namespace {
const char* bool_str(bool b) { return b ? "true" : "false"; }
} // namespace

std::string render_text(const SpinReport& r) {
    std::ostringstream os;
    os << "orientable=" << bool_str(r.orientable) << '\n';
    os << "holonomy_order=" << r.holonomy_order << '\n';
    os << "sylow_order=" << r.sylow_order << '\n';
    os << "spin_exists=" << bool_str(r.exists) << '\n';
    os << "count_cover=" << r.count_cover << '\n';
    os << "hom_z2=" << r.hom_z2 << '\n';
    os << "count_manifold=" << r.count_manifold << '\n';
    if (r.oracle_count)
        os << "oracle_count=" << *r.oracle_count << '\n';
    if (!r.lift_strings.empty()) {
        for (std::size_t j = 0; j < r.lift_strings.size(); ++j)
            os << "lift_g" << (j + 1) << "=" << r.lift_strings[j] << '\n';
    }
    for (const SignAssignment& a : r.assignments) {
        os << "assignment:";
        for (std::size_t i = 0; i < a.lattice_signs.size(); ++i)
            os << " eps(a" << (i + 1) << ")=" << (a.lattice_signs[i] > 0 ? "+1" : "-1");
        for (std::size_t j = 0; j < a.gen_signs.size(); ++j)
            os << " eps(g" << (j + 1) << ")=" << (a.gen_signs[j] > 0 ? "+" : "-") << "x"
               << (j + 1);
        os << '\n';
    }
    return os.str();
}

std::string render_json(const SpinReport& r, int indent) {
    nlohmann::ordered_json j;
    j["orientable"] = r.orientable;
    j["holonomy_order"] = r.holonomy_order;
    j["sylow_order"] = r.sylow_order;
    j["spin_exists"] = r.exists;
    j["count_cover"] = r.count_cover;
    j["hom_z2"] = r.hom_z2;
    j["count_manifold"] = r.count_manifold;
    if (r.oracle_count) j["oracle_count"] = *r.oracle_count;
    if (!r.lift_strings.empty()) j["lifts"] = r.lift_strings;
    if (!r.assignments.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const SignAssignment& a : r.assignments) {
            nlohmann::ordered_json o;
            o["lattice_signs"] = a.lattice_signs;
            o["gen_signs"] = a.gen_signs;
            arr.push_back(std::move(o));
        }
        j["assignments"] = std::move(arr);
    }
    return j.dump(indent);
}

} // namespace spinflat
