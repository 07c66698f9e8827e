#pragma once

#include "erep/errors.hpp"

#include <array>
#include <vector>

namespace erep {

struct Point3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

struct Point2 {
    double x = 0;
    double y = 0;
};

// Lattice points inside every sphere. The lattice step is the resolution and
// its origin is the minimum corner of the sphere set's bounding box, so the
// same spheres always voxelize identically. Points are ordered by (z, y, x).
struct VoxelRegion {
    double resolution = 0.5;
    std::vector<Point3> points;
};

struct AltitudeSlice {
    double z = 0;
    std::vector<Point2> points; // xy projection, ordered by (y, x)
};

enum class ExtremeQuery {
    x_at_y_extremes, // argmax/argmin x on the top row, then on the bottom row
    y_at_x_extremes, // argmax/argmin y on the right column, then the left
    axis_aligned,    // column/row extremes through a given interior point
};

// Membership is tested at voxel centers with an inclusive radius compare;
// z is clipped to >= 0. Empty output is a valid result. Throws
// invalid_input_error on length mismatch or non-positive radius/resolution.
VoxelRegion intersect_spheres(const std::vector<Point3>& centers,
                              const std::vector<double>& radii,
                              double resolution);

// Single-threaded reference with identical output, kept for tests and the
// benchmark. intersect_spheres dispatches to the parallel kernel when the
// build has OpenMP and otherwise falls through to this.
VoxelRegion intersect_spheres_serial(const std::vector<Point3>& centers,
                                     const std::vector<double>& radii,
                                     double resolution);

// z level with the most points; equal counts resolve to the lowest level.
// Throws empty_region_error on an empty region.
AltitudeSlice best_altitude_slice(const VoxelRegion& region);

// Arithmetic mean. Throws empty_region_error on an empty slice.
Point2 slice_centroid(const std::vector<Point2>& slice);

// Four trajectory corner candidates; duplicates appear when the slice
// degenerates to a single row or column. `through` is only read by the
// axis_aligned query and snaps to the nearest x column and y row that
// actually contain slice points. Throws empty_region_error on empty input.
std::array<Point2, 4> extreme_points(const std::vector<Point2>& slice,
                                     ExtremeQuery query,
                                     Point2 through = {});

} // namespace erep
