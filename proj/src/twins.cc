#include <pcg/errors.hh>
#include <pcg/orbit.hh>
#include <pcg/twins.hh>

using std::optional;
using std::string;
using std::vector;

using namespace pcg;

NotTwin::NotTwin(ColorId a, ColorId b, ColorId j) :
    PreconditionError{"colours " + std::to_string(a) + " and " + std::to_string(b) + " are not twins: they differ in column " + std::to_string(j)},
    column(j)
{
}

namespace
{
    auto first_twin_failure(const QuotientMatrix & s, ColorId a, ColorId b) -> optional<ColorId>
    {
        for (ColorId j = 1; j <= s.size(); ++j)
            if (j != a && j != b && s(a, j) != s(b, j))
                return j;
        return std::nullopt;
    }
}

auto pcg::twin_pairs(const QuotientMatrix & s) -> vector<ColorPair>
{
    vector<ColorPair> result;
    for (ColorId a = 1; a <= s.size(); ++a)
        for (ColorId b = a + 1; b <= s.size(); ++b)
            if (! first_twin_failure(s, a, b))
                result.emplace_back(a, b);
    return result;
}

auto pcg::equal_rows(const QuotientMatrix & s) -> vector<ColorPair>
{
    vector<ColorPair> result;
    for (ColorId a = 1; a <= s.size(); ++a)
        for (ColorId b = a + 1; b <= s.size(); ++b)
            if (s.rows[a - 1] == s.rows[b - 1])
                result.emplace_back(a, b);
    return result;
}

auto pcg::merge(const PeriodicColoring & f, ColorId a, ColorId b) -> PeriodicColoring
{
    int n = f.num_colors();
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw PreconditionError{"merge needs two distinct colours"};
    auto s = quotient(f);
    if (auto j = first_twin_failure(s, a, b))
        throw NotTwin{a, b, *j};

    auto renumber = [&](ColorId c) {
        if (c == b)
            c = a;
        return c > b ? c - 1 : c;
    };
    vector<ColorId> cells(f.cells());
    for (auto & c : cells)
        c = renumber(c);
    vector<string> tokens(f.tokens());
    tokens.erase(tokens.begin() + (b - 1));
    return PeriodicColoring{f.lattice(), std::move(cells), std::move(tokens)};
}

auto pcg::covering_target(const QuotientMatrix & s) -> optional<TargetGraph>
{
    int n = s.size();
    for (int i = 0; i < n; ++i) {
        if (s.rows[i][i] != 0)
            return std::nullopt;
        for (int j = 0; j < n; ++j)
            if (s.rows[i][j] > 1 || s.rows[i][j] != s.rows[j][i])
                return std::nullopt;
    }
    return TargetGraph{s.rows};
}

auto pcg::claim6_offsets() -> const vector<Vec2> &
{
    static const vector<Vec2> offsets{
        {0, 1}, {0, -1}, {1, 0}, {-1, 0},
        {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
        {0, 2}, {0, -2}, {2, 0}, {-2, 0},
        {2, 2}, {2, -2}, {-2, 2}, {-2, -2}};
    return offsets;
}

auto pcg::claim6_check(const PeriodicColoring & f) -> Claim6Result
{
    auto r = check(f);
    auto s = std::get_if<QuotientMatrix>(&r);
    if (! s || ! covering_target(*s) || ! equal_rows(*s).empty())
        return {Claim6Status::NotApplicable, std::nullopt};

    for (int i = 0; i < f.num_cells(); ++i) {
        auto v = f.cell(i);
        for (auto d : claim6_offsets())
            if (f.color_at(v + d) == f.cell_color(i))
                return {Claim6Status::Counterexample, std::pair{v, v + d}};
    }
    return {Claim6Status::Holds, std::nullopt};
}

auto pcg::theorem1_audit(const PeriodicColoring & f) -> DichotomyReport
{
    auto s = quotient(f);
    DichotomyReport report;
    report.is_covering = covering_target(s).has_value();
    report.twins = twin_pairs(s);
    report.is_orbit = is_orbit(f);
    report.dichotomy_holds = ! report.is_covering || report.is_orbit || ! report.twins.empty();
    return report;
}
