#include "erep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace erep {
namespace {

// Index guard so window edges that land exactly on a lattice plane are kept
// regardless of rounding direction.
constexpr double kIndexEps = 1e-9;

struct Lattice {
    double lo[3];          // bounding-box minimum corner, the lattice origin
    long long i0[3], i1[3]; // inclusive index range of the scan window
    bool empty = false;
};

Lattice make_lattice(const std::vector<Point3>& centers,
                     const std::vector<double>& radii,
                     double resolution) {
    if (centers.empty() || centers.size() != radii.size())
        throw invalid_input_error("intersect_spheres: need matching, non-empty centers and radii");
    if (!(resolution > 0))
        throw invalid_input_error("intersect_spheres: resolution must be positive");
    for (double r : radii)
        if (!(r > 0))
            throw invalid_input_error("intersect_spheres: radii must be positive");

    Lattice lat;
    double wlo[3], whi[3];
    for (int k = 0; k < 3; ++k) {
        lat.lo[k] = std::numeric_limits<double>::infinity();
        wlo[k] = -std::numeric_limits<double>::infinity();
        whi[k] = std::numeric_limits<double>::infinity();
    }
    for (std::size_t s = 0; s < centers.size(); ++s) {
        const double c[3] = {centers[s].x, centers[s].y, centers[s].z};
        const double r = radii[s];
        for (int k = 0; k < 3; ++k) {
            lat.lo[k] = std::min(lat.lo[k], c[k] - r);
            // The scan window is the intersection of the per-sphere boxes; any
            // common point must lie in it, so skipping the rest of the
            // bounding box never drops a member.
            wlo[k] = std::max(wlo[k], c[k] - r);
            whi[k] = std::min(whi[k], c[k] + r);
        }
    }
    for (int k = 0; k < 3; ++k) {
        // Tolerate exact tangency: boxes that touch within rounding noise
        // still get an index window, and membership decides from there.
        if (wlo[k] > whi[k] + 1e-12) {
            lat.empty = true;
            return lat;
        }
        lat.i0[k] = static_cast<long long>(std::ceil((wlo[k] - lat.lo[k]) / resolution - kIndexEps));
        lat.i1[k] = static_cast<long long>(std::floor((whi[k] - lat.lo[k]) / resolution + kIndexEps));
    }
    // Keep the region at or above ground level.
    const long long ground = static_cast<long long>(std::ceil((0.0 - lat.lo[2]) / resolution - kIndexEps));
    lat.i0[2] = std::max(lat.i0[2], ground);
    if (lat.i0[0] > lat.i1[0] || lat.i0[1] > lat.i1[1] || lat.i0[2] > lat.i1[2])
        lat.empty = true;
    return lat;
}

std::vector<Point3> scan_slab(const Lattice& lat,
                              const std::vector<Point3>& centers,
                              const std::vector<double>& radii,
                              double resolution,
                              long long kz) {
    std::vector<Point3> out;
    const double z = lat.lo[2] + resolution * static_cast<double>(kz);
    for (long long ky = lat.i0[1]; ky <= lat.i1[1]; ++ky) {
        const double y = lat.lo[1] + resolution * static_cast<double>(ky);
        for (long long kx = lat.i0[0]; kx <= lat.i1[0]; ++kx) {
            const double x = lat.lo[0] + resolution * static_cast<double>(kx);
            bool inside = true;
            for (std::size_t s = 0; s < centers.size(); ++s) {
                const double dx = x - centers[s].x;
                const double dy = y - centers[s].y;
                const double dz = z - centers[s].z;
                if (dx * dx + dy * dy + dz * dz > radii[s] * radii[s]) {
                    inside = false;
                    break;
                }
            }
            if (inside)
                out.push_back({x, y, z});
        }
    }
    return out;
}

} // namespace

VoxelRegion intersect_spheres_serial(const std::vector<Point3>& centers,
                                     const std::vector<double>& radii,
                                     double resolution) {
    const Lattice lat = make_lattice(centers, radii, resolution);
    VoxelRegion region;
    region.resolution = resolution;
    if (lat.empty)
        return region;
    for (long long kz = lat.i0[2]; kz <= lat.i1[2]; ++kz) {
        std::vector<Point3> slab = scan_slab(lat, centers, radii, resolution, kz);
        region.points.insert(region.points.end(), slab.begin(), slab.end());
    }
    return region;
}

VoxelRegion intersect_spheres(const std::vector<Point3>& centers,
                              const std::vector<double>& radii,
                              double resolution) {
#ifdef _OPENMP
    const Lattice lat = make_lattice(centers, radii, resolution);
    VoxelRegion region;
    region.resolution = resolution;
    if (lat.empty)
        return region;
    const long long nslabs = lat.i1[2] - lat.i0[2] + 1;
    std::vector<std::vector<Point3>> slabs(static_cast<std::size_t>(nslabs));
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < nslabs; ++s)
        slabs[static_cast<std::size_t>(s)] =
            scan_slab(lat, centers, radii, resolution, lat.i0[2] + s);
    // Concatenating in slab order reproduces the serial (z, y, x) ordering
    // no matter how the loop above was scheduled.
    std::size_t total = 0;
    for (const auto& slab : slabs)
        total += slab.size();
    region.points.reserve(total);
    for (const auto& slab : slabs)
        region.points.insert(region.points.end(), slab.begin(), slab.end());
    return region;
#else
    return intersect_spheres_serial(centers, radii, resolution);
#endif
}

AltitudeSlice best_altitude_slice(const VoxelRegion& region) {
    if (region.points.empty())
        throw empty_region_error("best_altitude_slice: region is empty");
    // Points arrive sorted by z, so each level is a contiguous run. A later
    // level replaces the best only on a strictly larger count, which leaves
    // ties at the lowest altitude.
    std::size_t best_begin = 0, best_count = 0;
    std::size_t run_begin = 0;
    const auto& pts = region.points;
    for (std::size_t i = 1; i <= pts.size(); ++i) {
        if (i == pts.size() || pts[i].z != pts[run_begin].z) {
            const std::size_t count = i - run_begin;
            if (count > best_count) {
                best_count = count;
                best_begin = run_begin;
            }
            run_begin = i;
        }
    }
    AltitudeSlice slice;
    slice.z = pts[best_begin].z;
    slice.points.reserve(best_count);
    for (std::size_t i = best_begin; i < best_begin + best_count; ++i)
        slice.points.push_back({pts[i].x, pts[i].y});
    return slice;
}

Point2 slice_centroid(const std::vector<Point2>& slice) {
    if (slice.empty())
        throw empty_region_error("slice_centroid: slice is empty");
    double sx = 0, sy = 0;
    for (const auto& p : slice) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(slice.size());
    return {sx / n, sy / n};
}

namespace {

// Value in `values` closest to `target`; equidistant pairs resolve low.
double snap_to_present(const std::vector<Point2>& slice, double Point2::* axis, double target) {
    double best = slice.front().*axis;
    double best_d = std::abs(best - target);
    for (const auto& p : slice) {
        const double v = p.*axis;
        const double d = std::abs(v - target);
        if (d < best_d || (d == best_d && v < best)) {
            best = v;
            best_d = d;
        }
    }
    return best;
}

} // namespace

std::array<Point2, 4> extreme_points(const std::vector<Point2>& slice,
                                     ExtremeQuery query,
                                     Point2 through) {
    if (slice.empty())
        throw empty_region_error("extreme_points: slice is empty");

    // Scans a predicate-selected subset for the point with the extreme
    // coordinate along `axis`.
    auto extreme_on = [&](double Point2::* sel_axis, double sel_value,
                          double Point2::* axis, bool want_max) {
        Point2 best{};
        bool found = false;
        for (const auto& p : slice) {
            if (p.*sel_axis != sel_value)
                continue;
            if (!found || (want_max ? p.*axis > best.*axis : p.*axis < best.*axis)) {
                best = p;
                found = true;
            }
        }
        return best;
    };

    double xmin = slice.front().x, xmax = slice.front().x;
    double ymin = slice.front().y, ymax = slice.front().y;
    for (const auto& p : slice) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    switch (query) {
    case ExtremeQuery::x_at_y_extremes:
        return {extreme_on(&Point2::y, ymax, &Point2::x, true),
                extreme_on(&Point2::y, ymax, &Point2::x, false),
                extreme_on(&Point2::y, ymin, &Point2::x, true),
                extreme_on(&Point2::y, ymin, &Point2::x, false)};
    case ExtremeQuery::y_at_x_extremes:
        return {extreme_on(&Point2::x, xmax, &Point2::y, true),
                extreme_on(&Point2::x, xmax, &Point2::y, false),
                extreme_on(&Point2::x, xmin, &Point2::y, true),
                extreme_on(&Point2::x, xmin, &Point2::y, false)};
    case ExtremeQuery::axis_aligned: {
        const double col = snap_to_present(slice, &Point2::x, through.x);
        const double row = snap_to_present(slice, &Point2::y, through.y);
        return {extreme_on(&Point2::x, col, &Point2::y, true),
                extreme_on(&Point2::x, col, &Point2::y, false),
                extreme_on(&Point2::y, row, &Point2::x, true),
                extreme_on(&Point2::y, row, &Point2::x, false)};
    }
    }
    throw invalid_input_error("extreme_points: unknown query");
}

} // namespace erep
