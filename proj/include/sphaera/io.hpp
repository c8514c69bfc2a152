#pragma once

#include <string>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/pentagon.hpp"
#include "sphaera/verify.hpp"

namespace sphaera {

// "0.5pi", "pi/4", "3pi/2", "-0.25pi", "1.2" (radians)
double parse_angle(const std::string& s);

std::string pentagon_to_json(const Pentagon& p);
Pentagon pentagon_from_json(const std::string& text);

// {f, tiles:[{chirality, corners:[labels]}], twins:[[tile,slot,tile,slot]...], canonical}
std::string tiling_to_json(const CombTiling& t);
CombTiling tiling_from_json(const std::string& text);

std::string report_to_json(const VerifyReport& r);
std::string placed_to_json(const PlacedTiling& pt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace sphaera
