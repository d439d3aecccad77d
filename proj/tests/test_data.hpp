#pragma once

#include "spinflat/affine.hpp"

#include <string>

namespace testdata {

inline spinflat::CrystalGroupInput load(const std::string& name) {
    return spinflat::parse_group_file(std::string(SPINFLAT_DATA_DIR) + "/" + name);
}

inline spinflat::CrystalGroupInput torus(int n) {
    return spinflat::parse_group_string("dim " + std::to_string(n) + "\n");
}

inline spinflat::CrystalGroupInput min134() { return load("min.134.1.2.2.grp"); }
inline spinflat::CrystalGroupInput sylow134() { return load("sylow.134.1.2.2.grp"); }
inline spinflat::CrystalGroupInput klein2() { return load("klein2.grp"); }
inline spinflat::CrystalGroupInput halfturn3() { return load("halfturn3.grp"); }
inline spinflat::CrystalGroupInput hw3() { return load("hw3.grp"); }

} // namespace testdata
