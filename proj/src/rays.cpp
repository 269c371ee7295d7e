#include "adnil/rays.hpp"

#include "adnil/nilpotence.hpp"

#include <stdexcept>
#include <string>

namespace adnil {

namespace {

void require_fit(const ShiftedPartition& sp, int N) {
    if (!sp.fits_shifted_staircase(N))
        throw std::invalid_argument("shifted diagram " + sp.str() + " exceeds the shifted staircase S_" + std::to_string(N));
}

// Right edge (x coordinate) of row r of the shifted diagram; row r starts at x = r - 1.
int right_edge(const ShiftedPartition& sp, int r) { return r - 1 + sp[r]; }

}  // namespace

int c_single_ray_class(const ShiftedPartition& sp, int n) {
    require_fit(sp, 2 * n - 1);
    if (sp.empty()) return 0;
    int x = sp[1];
    int k = 0;
    while (true) {
        // Going down at x: the diagonal x = y comes first when x <= n.
        if (x <= n) return 2 * k + 1;
        const int y = 2 * n - x;
        ++k;
        const int row = y + 1;
        if (sp[row] == 0) return 2 * k;
        x = right_edge(sp, row);
    }
}

int c_atmost_ray_count(const ShiftedPartition& sp, int n) {
    require_fit(sp, 2 * n - 1);
    if (sp.empty()) return 0;
    int y = sp.length();
    int touches = 0;
    while (y > 0) {
        const int x = 2 * n - y;  // travelling right until x + y = 2n
        ++touches;
        // travelling up at x until a row sticks out beyond x
        int row = y;
        while (row >= 1 && right_edge(sp, row) <= x) --row;
        y = row;  // bottom edge of the blocking row, or 0 at the top
    }
    return 2 * touches;
}

RayEnd trace_bd_ray(const ShiftedPartition& sp, int n, Family family, int start_row, DTie tie) {
    if (family != Family::B && family != Family::D) throw std::invalid_argument("trace_bd_ray: family must be B or D");
    if (start_row != 1 && start_row != 2) throw std::invalid_argument("trace_bd_ray: start row must be 1 or 2");
    const int L = family == Family::B ? 2 * n : 2 * n - 1;
    RayEnd end;
    int x = right_edge(sp, start_row);
    while (true) {
        // Going down at x: meets x = y - 1 at y = x + 1 and x + y = L at y = L - x.
        const int diag = x + 1;
        const int anti = L - x;
        if (diag < anti || (diag == anti && tie == DTie::Terminate)) {
            end.vertical = true;
            end.position = x;
            return end;
        }
        const int y = anti;
        ++end.touches;
        const int row = y + 1;
        if (sp[row] == 0) {
            end.vertical = false;
            end.position = y - 1;
            return end;
        }
        x = right_edge(sp, row);
    }
}

BDSubclass bd_two_ray_classify(const ShiftedPartition& sp, int n, Family family, DTie tie) {
    require_fit(sp, family == Family::B ? 2 * n - 1 : 2 * n - 2);
    BDSubclass out;
    if (sp.empty()) return out;
    {
        // Class at most one: the first step of the staircase recursion empties the completion.
        const Partition lambda = symmetric_completion(sp, family, n);
        const int N = completion_staircase(family, n);
        if (lambda[N + 2 - lambda.first()] == 0) {
            out.nilpotence = 1;
            return out;
        }
    }
    const RayEnd r1 = trace_bd_ray(sp, n, family, 1, tie);
    const RayEnd r2 = trace_bd_ray(sp, n, family, 2, tie);
    const int p1 = r1.position, p2 = r2.position;
    const int t1 = r1.touches, t2 = r2.touches;
    const bool h1 = !r1.vertical, h2 = !r2.vertical;
    // Positions compare along x = y - 1; a larger position lies further right.
    const struct {
        bool holds;
        int id, k, cls;
    } cases[] = {
        {h2 && h1 && p1 >= p2 && t1 == t2 + 1, 1, t2, 2 * t2 + 1},
        {h2 && !h1 && p1 > p2, 1, t2, 2 * t2 + 1},
        {h2 && !h1 && p1 <= p2, 2, t2, 2 * t2},
        {!h2 && h1 && p1 < p2, 3, t1, 2 * t1},
        {!h2 && !h1 && p1 <= p2 && t1 == t2 + 1, 4, t1, 2 * t1},
        {!h2 && h1 && p1 >= p2, 5, t1, 2 * t1 - 1},
        {!h2 && !h1 && p1 >= p2 && t1 == t2, 6, t1 + 1, 2 * t1 + 1},
        {h2 && h1 && p1 <= p2 && t1 == t2, 7, t2, 2 * t2},
    };
    int matches = 0;
    for (const auto& c : cases) {
        if (!c.holds) continue;
        ++matches;
        out.case_id = c.id;
        out.k = c.k;
        out.nilpotence = c.cls;
    }
    if (matches != 1)
        throw InvariantError("two-ray configuration of " + sp.str() + " matches " + std::to_string(matches) + " cases");
    return out;
}

}  // namespace adnil
