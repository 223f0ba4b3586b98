#pragma once

#include "placeode/puiseux.hpp"

#include <map>
#include <vector>

namespace placeode {

struct InitialTuple {
    AlgebraicNumber c0, c1;
};

struct SolutionTruncation {
    TruncatedSeries y;
    InitialTuple center;
    /// 1-based index of the generating place in places_at order (0 for the direct method)
    int place_id = 0;
    /// the reparametrization S (empty for the direct method)
    TruncatedSeries repar;
};

struct CriticalPoint {
    Point point;
    bool on_z_axis = false;
    bool separant_zero = false;
    /// on the z-axis but not a zero of the separant: never a solution place center
    bool non_solution_place = false;
};

struct Classification {
    /// solution count -> points; the count 1 is kept in a1_extra
    std::map<int, std::vector<Point>> buckets;
    std::vector<Point> a1_complement_of;
    std::vector<Point> a1_extra;
    std::vector<AlgebraicNumber> constants;
};

/// ord(A') = ord(B), cross-checked against the criterion in terms of orders at the center.
bool is_order_suitable(const Place& p);

/// S with A'(S) S' = B(S), S(0) = 0; certified as far as the place allows (at most N).
TruncatedSeries reparametrize(const Place& p, int N);

/// Non-constant solution truncations through c, each to order max(N, mult + e).
std::vector<SolutionTruncation> solve_at(const BiPoly& F, const InitialTuple& c, int N);

/// Distinct roots of F(y, 0).
std::vector<AlgebraicNumber> constant_solutions(const BiPoly& F);

/// V(F, z) united with V(F, S_F), in numeric point order.
std::vector<CriticalPoint> critical_set(const BiPoly& F);

/// Buckets the critical points by the number of solutions; jobs > 1 runs points concurrently.
Classification classify(const BiPoly& F, int N, int jobs = 1);

/// Separant recursion; throws PointNotOnCurve or SeparantVanishes.
SolutionTruncation direct_method(const BiPoly& F, const InitialTuple& c, int N);

} // namespace placeode
