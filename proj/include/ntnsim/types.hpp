#pragma once

#include <cmath>
#include <complex>

namespace ntnsim {

using cgain = std::complex<double>;

struct Position3D {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
    double z = 0.0;  // altitude above the ground plane, meters

    bool operator==(const Position3D&) const = default;
};

enum class LinkClass { haps_ground, haps_uav, uav_ground };

enum class Environment { urban };

enum class RisMode { passive, active };

enum class Scheme { I = 1, II = 2, III = 3, IV = 4 };

enum class Condition { ideal, impaired };

struct LinkGeometry {
    double slant_distance_m = 0.0;
    double elevation_deg = 0.0;
    LinkClass link_class = LinkClass::haps_ground;
};

struct LinkState {
    bool is_los = true;
    double shadowing_db = 0.0;
    double pathloss_db = 0.0;  // fspl + shadowing (+ clutter when NLoS)
};

const char* to_string(Scheme s);
const char* to_string(Condition c);
const char* to_string(RisMode m);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

}  // namespace ntnsim
