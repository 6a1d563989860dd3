#include <pcg/errors.hh>
#include <pcg/kernels.hh>
#include <pcg/orbit.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using std::int32_t;
using std::optional;
using std::pair;
using std::vector;

using namespace pcg;

namespace
{
    auto reduced(const Lattice & l, const GridAutomorphism & a) -> GridAutomorphism
    {
        return {a.point, l.reduce(a.shift)};
    }

    auto find_root(vector<int> & parent, int x) -> int
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    auto ball(int radius) -> vector<Vec2>
    {
        vector<Vec2> result;
        for (int dy = -radius; dy <= radius; ++dy)
            for (int dx = -radius; dx <= radius; ++dx)
                if (std::abs(dx) + std::abs(dy) <= radius)
                    result.push_back({dx, dy});
        return result;
    }
}

auto pcg::stabilizer(const PeriodicColoring & f) -> StabilizerGroup
{
    auto base = reduce_to_maximal(f);
    auto & l = base.lattice();
    size_t n = size_t(base.num_cells());
    vector<int32_t> colors(base.cells().begin(), base.cells().end());

    // any colour-preserving automorphism conjugates the period lattice onto
    // g(L), which must then be L itself
    StabilizerGroup group{l, {}};
    vector<int32_t> perm(n);
    for (auto & g : d4_elements()) {
        if (l.transformed(g) != l)
            continue;
        vector<Vec2> moved(n);
        for (size_t i = 0; i < n; ++i)
            moved[i] = g(l.cell(int(i)));
        for (size_t t = 0; t < n; ++t) {
            auto shift = l.cell(int(t));
            for (size_t i = 0; i < n; ++i)
                perm[i] = l.cell_index(moved[i] + shift);
            if (kernels::gather_mismatch(colors.data(), perm.data(), n) == n)
                group.elements.push_back({g, shift});
        }
    }

    std::set<GridAutomorphism> members(group.elements.begin(), group.elements.end());
    if (! members.contains(identity_automorphism()))
        throw std::logic_error{"stabilizer lacks the identity"};
    for (auto & a : group.elements) {
        if (! members.contains(reduced(l, inverse(a))))
            throw std::logic_error{"stabilizer is not closed under inverses"};
        for (auto & b : group.elements)
            if (! members.contains(reduced(l, compose(a, b))))
                throw std::logic_error{"stabilizer is not closed under composition"};
    }
    return group;
}

auto pcg::orbits(const PeriodicColoring & f) -> OrbitPartition
{
    auto group = stabilizer(f);
    auto & l = group.lattice;
    int n = int(l.index());

    vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto & a : group.elements)
        for (int i = 0; i < n; ++i) {
            int x = find_root(parent, i), y = find_root(parent, l.cell_index(apply(a, l.cell(i))));
            if (x != y)
                parent[std::max(x, y)] = std::min(x, y);
        }

    OrbitPartition result{l, vector<int>(n), 0};
    vector<int> id(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = find_root(parent, i);
        if (id[root] == -1)
            id[root] = result.count++;
        result.orbit_of_cell[i] = id[root];
    }
    return result;
}

auto pcg::orbit_report(const PeriodicColoring & f) -> OrbitReport
{
    auto base = reduce_to_maximal(f);
    auto partition = orbits(base);
    OrbitReport report;
    report.num_orbits = partition.count;
    report.stabilizer_order = stabilizer(base).order();

    vector<int> first_cell(base.num_colors() + 1, -1);
    for (int i = 0; i < base.num_cells(); ++i) {
        auto c = base.cell_color(i);
        if (first_cell[c] == -1)
            first_cell[c] = i;
        else if (partition.orbit_of_cell[first_cell[c]] != partition.orbit_of_cell[i] && ! report.counterexample_pair)
            report.counterexample_pair = pair{base.cell(first_cell[c]), base.cell(i)};
    }
    report.orbit = ! report.counterexample_pair;
    return report;
}

auto pcg::is_orbit(const PeriodicColoring & f) -> bool
{
    return orbit_report(f).orbit;
}

auto pcg::ball_similar(const PeriodicColoring & f, int radius) -> BallSimilarity
{
    if (radius < 0)
        throw PreconditionError{"radius must be nonnegative"};
    auto base = reduce_to_maximal(f);
    auto offsets = ball(radius);
    int n = base.num_cells();
    for (int i = 0; i < n; ++i) {
        auto x = base.cell(i);
        for (int j = 0; j < n; ++j) {
            if (base.cell_color(i) != base.cell_color(j))
                continue;
            auto y = base.cell(j);
            // phi(u) = g(u - x) + y
            bool found = std::any_of(d4_elements().begin(), d4_elements().end(), [&](const PointMatrix & g) {
                return std::all_of(offsets.begin(), offsets.end(),
                    [&](Vec2 d) { return base.color_at(y + g(d)) == base.color_at(x + d); });
            });
            if (! found)
                return {false, pair{x, y}};
        }
    }
    return {true, std::nullopt};
}

auto pcg::find_automorphism(const PeriodicColoring & f, Vec2 x, Vec2 y) -> optional<GridAutomorphism>
{
    if (f.color_at(x) != f.color_at(y))
        throw PreconditionError{"nodes have different colours"};
    auto group = stabilizer(f);
    auto & l = group.lattice;
    for (auto & a : group.elements) {
        auto z = apply(a, x);
        if (l.contains(y - z))
            return GridAutomorphism{a.point, a.shift + (y - z)};
    }
    return std::nullopt;
}
