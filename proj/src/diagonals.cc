#include <pcg/diagonals.hh>
#include <pcg/errors.hh>

#include <cstdlib>
#include <numeric>
#include <set>

using std::string;
using std::vector;

using namespace pcg;

namespace
{
    // smallest k > 0 with k g in the lattice
    auto diagonal_period(const Lattice & l, Orientation o) -> Coord
    {
        auto g = diagonal_generator(o);
        for (Coord k = 1;; ++k)
            if (l.contains(k * g))
                return k;
    }

    auto minimal_period(const vector<ColorId> & seq) -> size_t
    {
        size_t n = seq.size();
        for (size_t d = 1; d < n; ++d) {
            if (n % d != 0)
                continue;
            bool ok = true;
            for (size_t i = d; i < n && ok; ++i)
                ok = seq[i] == seq[i - d];
            if (ok)
                return d;
        }
        return n;
    }
}

auto pcg::to_string(DiagonalKind k) -> string
{
    switch (k) {
    case DiagonalKind::OneColor: return "one-color";
    case DiagonalKind::BinaryAlternating: return "binary-alternating";
    case DiagonalKind::Binary: return "binary";
    case DiagonalKind::Other: return "other";
    }
    return "other";
}

auto pcg::to_string(Orientation o) -> string
{
    return o == Orientation::Right ? "right" : "left";
}

auto pcg::diagonal_modulus(const PeriodicColoring & f, Orientation o) -> Coord
{
    auto m = maximal_periods(f);
    return std::abs(std::gcd(diagonal_index(m.p1(), o), diagonal_index(m.p2(), o)));
}

auto pcg::diagonal_sequence(const PeriodicColoring & f, Orientation o, Coord index) -> DiagonalDescriptor
{
    auto g = diagonal_generator(o);
    Vec2 start{index, 0};
    auto period = diagonal_period(f.lattice(), o);

    vector<ColorId> seq;
    for (Coord i = 0; i < period; ++i)
        seq.push_back(f.color_at(start + i * g));
    seq.resize(minimal_period(seq));

    DiagonalDescriptor d{o, index, diagonal_modulus(f, o), seq, DiagonalKind::Other};
    std::set<ColorId> distinct(seq.begin(), seq.end());
    if (distinct.size() == 1)
        d.kind = DiagonalKind::OneColor;
    else if (distinct.size() == 2)
        d.kind = seq.size() == 2 ? DiagonalKind::BinaryAlternating : DiagonalKind::Binary;
    return d;
}

auto pcg::diagonal_classes(const PeriodicColoring & f) -> vector<DiagonalDescriptor>
{
    vector<DiagonalDescriptor> result;
    for (auto o : {Orientation::Right, Orientation::Left}) {
        auto m = diagonal_modulus(f, o);
        for (Coord r = 0; r < m; ++r)
            result.push_back(diagonal_sequence(f, o, r));
    }
    return result;
}

auto pcg::find_special_diagonals(const PeriodicColoring & f) -> vector<DiagonalDescriptor>
{
    vector<DiagonalDescriptor> result;
    for (auto & d : diagonal_classes(f))
        if (d.kind != DiagonalKind::Other)
            result.push_back(d);
    return result;
}

auto pcg::shift_residue_class(const PeriodicColoring & f, Orientation o, Coord r, Coord m, Coord t) -> PeriodicColoring
{
    if (m < 1)
        throw PreconditionError{"modulus must be positive"};
    auto maximal = maximal_periods(f);
    for (auto p : {maximal.p1(), maximal.p2()})
        if (diagonal_index(p, o) % m != 0)
            throw PreconditionError{"modulus " + std::to_string(m) + " does not divide the " + to_string(o) +
                " diagonal index of period (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"};

    auto & l = f.lattice();
    auto step = t * diagonal_generator(o);
    vector<ColorId> cells(f.cells());
    for (int i = 0; i < f.num_cells(); ++i) {
        auto v = l.cell(i);
        if (floor_mod(diagonal_index(v, o) - r, m) == 0)
            cells[i] = f.color_at(v - step);
    }
    return PeriodicColoring{l, std::move(cells), f.tokens()};
}

auto pcg::shift_half_plane(const WindowColoring & w, Orientation o, Coord cut, Coord t) -> WindowColoring
{
    auto step = t * diagonal_generator(o);
    WindowColoring result = w;
    for (int r = 0; r < w.height; ++r)
        for (int c = 0; c < w.width; ++c) {
            Vec2 v = w.origin + Vec2{c, r};
            if (diagonal_index(v, o) > cut)
                result.cells[r * w.width + c] = w.at(v - step);
        }
    return result;
}
