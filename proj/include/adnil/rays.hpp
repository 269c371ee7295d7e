#pragma once

#include "adnil/partitions.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

// Type C: a single broken ray starting right of row 1 of the shifted diagram,
// reflected between the line x + y = 2n and the diagram border until it meets
// the diagonal x = y. With k touching points, the class is 2k + 1 when the ray
// arrives there travelling down and 2k when travelling left.
int c_single_ray_class(const ShiftedPartition& sp, int n);

// Type C: the ray started on the diagonal at the bottom row of the diagram and
// travelling right/up. Twice its number of touching points bounds the class.
int c_atmost_ray_count(const ShiftedPartition& sp, int n);

// How a ray of the two-ray construction ended on the line x = y - 1.
struct RayEnd {
    bool vertical = false;  // arrived travelling down (otherwise travelling left)
    int touches = 0;        // touching points on the reflecting antidiagonal
    int position = 0;       // x coordinate of the end point
};

// Convention for a type-D ray that meets the diagonal and the antidiagonal at
// the same point (column n - 1).
enum class DTie { Terminate, Touch };

// Ray from the right border of `start_row` (1 or 2). Reflects off
// x + y = 2n for B and x + y = 2n - 1 for D.
RayEnd trace_bd_ray(const ShiftedPartition& sp, int n, Family family, int start_row, DTie tie = DTie::Terminate);

struct BDSubclass {
    int case_id = 0;  // 1..7; 0 when the class (0 or 1) is read off directly
    int k = 0;
    int nilpotence = 0;
};

// Types B and D: classify the pair of rays into one of the seven
// configurations and read off the class of nilpotence.
BDSubclass bd_two_ray_classify(const ShiftedPartition& sp, int n, Family family, DTie tie = DTie::Terminate);

}  // namespace adnil
