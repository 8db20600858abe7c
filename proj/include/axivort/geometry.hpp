#pragma once

namespace axivort {

/// Point in the meridian half-plane {(r, z) : r >= 0}.
struct HalfPlanePoint {
    double r = 0.0;
    double z = 0.0;
};

/// Meridian velocity components (u^r, u^z); the swirl component is identically zero.
struct Velocity {
    double ur = 0.0;
    double uz = 0.0;
};

inline double dist2(const HalfPlanePoint& a, const HalfPlanePoint& b) {
    const double dr = a.r - b.r;
    const double dz = a.z - b.z;
    return dr * dr + dz * dz;
}

}  // namespace axivort
