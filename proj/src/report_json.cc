#include <pcg/report_json.hh>

using nlohmann::json;

using namespace pcg;

namespace
{
    auto point(Vec2 v) -> json
    {
        return json::array({v.x, v.y});
    }

    auto pairs(const std::vector<ColorPair> & ps) -> json
    {
        json out = json::array();
        for (auto & [a, b] : ps)
            out.push_back(json::array({a, b}));
        return out;
    }
}

auto pcg::to_json(const PeriodicColoring & f) -> json
{
    auto & l = f.lattice();
    json rows = json::array();
    for (Coord r = 0; r < l.height(); ++r) {
        json row = json::array();
        for (Coord c = 0; c < l.width(); ++c)
            row.push_back(f.token(f.cell_color(int(r * l.width() + c))));
        rows.push_back(row);
    }
    return {{"periods", json::array({point(l.p1()), point(l.p2())})}, {"rows", rows}};
}

auto pcg::to_json(const QuotientMatrix & s) -> json
{
    return s.rows;
}

auto pcg::to_json(const Violation & v) -> json
{
    return {{"node", point(v.node)}, {"color", v.color},
        {"expected", v.expected ? json(*v.expected) : json(nullptr)},
        {"observed", json(std::vector<int>(v.observed.begin(), v.observed.end()))}};
}

auto pcg::to_json(const CheckResult & r) -> json
{
    if (auto s = std::get_if<QuotientMatrix>(&r))
        return {{"perfect", true}, {"quotient", to_json(*s)}, {"violation", nullptr}};
    return {{"perfect", false}, {"quotient", nullptr}, {"violation", to_json(std::get<Violation>(r))}};
}

auto pcg::to_json(const DichotomyReport & d) -> json
{
    return {{"covering", d.is_covering}, {"twins", pairs(d.twins)}, {"orbit", d.is_orbit}, {"dichotomy", d.dichotomy_holds}};
}

auto pcg::to_json(const DiagonalDescriptor & d) -> json
{
    return {{"orientation", to_string(d.orientation)}, {"residue", d.index}, {"modulus", d.modulus},
        {"kind", to_string(d.kind)}, {"colors", d.colors}};
}

auto pcg::to_json(const std::vector<DiagonalDescriptor> & ds) -> json
{
    json out = json::array();
    for (auto & d : ds)
        out.push_back(to_json(d));
    return out;
}

auto pcg::to_json(const OrbitReport & r) -> json
{
    json pair = nullptr;
    if (r.counterexample_pair)
        pair = json::array({point(r.counterexample_pair->first), point(r.counterexample_pair->second)});
    return {{"orbit", r.orbit}, {"num_orbits", r.num_orbits}, {"stabilizer_order", r.stabilizer_order},
        {"counterexample_pair", pair}};
}

auto pcg::to_json(const ClassificationReport & r) -> json
{
    auto & m = r.maximal_periods;
    return {
        {"canonical", r.canonical_form},
        {"perfect", r.perfect},
        {"quotient", r.quotient ? to_json(*r.quotient) : json(nullptr)},
        {"violation", r.violation ? to_json(*r.violation) : json(nullptr)},
        {"bipartite", r.bipartite},
        {"twins", pairs(r.twins)},
        {"covering", r.covering},
        {"special_diagonals", to_json(r.special_diagonals)},
        {"orbit", r.orbit},
        {"maximal_periods", json::array({point(m.p1()), point(m.p2())})},
    };
}
