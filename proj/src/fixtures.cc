#include <pcg/errors.hh>
#include <pcg/fixtures.hh>

using std::string;
using std::vector;

using namespace pcg;
using namespace pcg::fixtures;

auto pcg::fixtures::list() -> const vector<FixtureInfo> &
{
    // (h) and (i) are drawn with rows along diagonals in their source figures
    // and are stored here in ordinary coordinates
    static const vector<FixtureInfo> table{
        {"b", "bipartite, 10 colours, orbit",
            "# pcg v1\nperiods (8,0) (4,4)\n4 7 4 2 6 8 6 3\n7 9 7 5 8 10 8 5\n4 7 4 3 6 8 6 2\n3 5 2 1 2 5 3 1\n",
            10, false, true, 1, 32,
            QuotientMatrix{{{0, 2, 2, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 2, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 1, 1, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 2, 0, 0}, {0, 0, 0, 2, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 2, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 4, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 4, 0, 0}}}},
        {"c", "bipartite, 10 colours, orbit",
            "# pcg v1\nperiods (4,0) (0,4)\n5 10 5 9\n1 6 2 4\n3 7 3 8\n2 6 1 4\n",
            10, false, true, 1, 16,
            QuotientMatrix{{{0, 0, 1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 1, 1, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 2, 0, 0, 2, 0, 0, 0, 0}, {0, 0, 2, 2, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 2, 2, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 2, 0, 0, 0, 0}}}},
        {"d", "bipartite, 9 colours, orbit",
            "# pcg v1\nperiods (4,0) (0,8)\n1 7 2 8\n6 3 6 3\n2 8 1 7\n9 5 9 4\n1 8 2 7\n6 3 6 3\n2 7 1 8\n9 4 9 5\n",
            9, false, true, 1, 32,
            QuotientMatrix{{{0, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 2, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 2, 0, 2}, {0, 0, 0, 0, 0, 0, 0, 2, 2}, {1, 1, 2, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 1, 0, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0, 0, 0}}}},
        {"e", "bipartite, 8 colours, not orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n6 4 7 3 8 2\n4 5 4 8 1 8\n7 4 6 2 8 3\n2 8 3 7 4 6\n8 1 8 4 5 4\n3 8 2 6 4 7\n",
            8, false, false, 2, 36,
            QuotientMatrix{{{0, 0, 0, 0, 0, 0, 0, 4}, {0, 0, 0, 0, 0, 1, 1, 2}, {0, 0, 0, 0, 0, 1, 1, 2}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 4, 0, 0, 0, 0}, {0, 1, 1, 2, 0, 0, 0, 0}, {0, 1, 1, 2, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0}}}},
        {"f", "bipartite, 10 colours, orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n8 5 7 3 10 2\n4 6 4 9 1 9\n7 5 8 2 10 3\n2 10 3 7 5 8\n9 1 9 4 6 4\n3 10 2 8 5 7\n",
            10, false, true, 2, 36,
            QuotientMatrix{{{0, 0, 0, 0, 0, 0, 0, 0, 2, 2}, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 1, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 1, 1, 0, 1}, {0, 0, 0, 2, 2, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 1, 0, 0, 0, 0, 0}}}},
        {"g", "bipartite, 11 colours, orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n10 5 10 3 8 2\n5 9 5 11 1 11\n10 5 10 2 8 3\n2 11 3 7 4 7\n8 1 8 4 6 4\n3 11 2 7 4 7\n",
            11, false, true, 1, 36,
            QuotientMatrix{{{0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2}, {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 2, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1}, {0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0}}}},
        {"h", "bipartite, 8 colours, covering, orbit",
            "# pcg v1\nperiods (4,0) (2,2)\n1 6 4 7\n8 3 5 2\n",
            8, true, true, 12, 8,
            QuotientMatrix{{{0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0}}}},
        {"i", "bipartite, 8 colours, not orbit",
            "# pcg v1\nperiods (8,0) (4,4)\n3 1 6 8 3 1 6 8\n2 4 8 6 2 4 8 6\n5 7 3 1 5 7 3 1\n7 5 2 4 7 5 2 4\n",
            8, false, false, 2, 16,
            QuotientMatrix{{{0, 0, 1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0, 2, 0}, {1, 1, 0, 0, 0, 0, 0, 2}, {0, 0, 1, 1, 2, 0, 0, 0}, {0, 0, 1, 1, 0, 2, 0, 0}}}},
        {"II-base", "bipartite, 4 colours, orbit",
            "# pcg v1\nperiods (4,0) (0,4)\n4 1 4 1\n2 4 3 4\n4 1 4 1\n3 4 2 4\n",
            4, false, true, 3, 8,
            QuotientMatrix{{{0, 0, 0, 4}, {0, 0, 0, 4}, {0, 0, 0, 4}, {2, 1, 1, 0}}}},
        {"V-a", "bipartite, 9 colours, orbit",
            "# pcg v1\nperiods (8,0) (4,4)\n4 6 7 5 4 5 7 6\n5 8 2 9 6 8 1 9\n7 1 3 1 7 2 3 2\n6 9 2 8 5 9 1 8\n",
            9, false, true, 5, 32,
            std::nullopt},
        {"V-b", "bipartite, 10 colours, orbit",
            "# pcg v1\nperiods (8,0) (4,4)\n6 9 6 1 8 10 8 2\n9 4 9 7 10 5 10 7\n6 9 6 2 8 10 8 1\n2 7 1 3 1 7 2 3\n",
            10, false, true, 1, 32,
            std::nullopt},
        {"VIb-iii", "bipartite, 9 colours, not orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n9 6 9 2 8 1\n5 4 5 7 3 7\n9 6 9 1 8 2\n1 8 2 9 6 9\n7 3 7 5 4 5\n2 8 1 9 6 9\n",
            9, false, false, 1, 36,
            std::nullopt},
        {"VIb-iv", "bipartite, 10 colours, orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n10 6 9 2 8 1\n5 4 5 7 3 7\n9 6 10 1 8 2\n1 8 2 9 6 10\n7 3 7 5 4 5\n2 8 1 10 6 9\n",
            10, false, true, 2, 36,
            std::nullopt},
        {"VIb-v", "bipartite, 11 colours, orbit",
            "# pcg v1\nperiods (6,0) (0,6)\n11 7 11 2 8 1\n7 5 7 9 3 9\n11 7 11 1 8 2\n1 9 2 10 6 10\n8 3 8 6 4 6\n2 9 1 10 6 10\n",
            11, false, true, 1, 36,
            std::nullopt},
        {"L1-a", "bipartite, 16 colours, covering, orbit",
            "# pcg v1\nperiods (4,0) (0,4)\n7 G 5 H\nE 4 B 1\n6 A 0 C\nF 3 D 2\n",
            16, true, true, 0, 16,
            std::nullopt},
        {"L1-b", "bipartite, 16 colours, covering, orbit",
            "# pcg v1\nperiods (4,0) (0,8)\n7 H 5 G\nE 4 B 1\n6 A 0 C\nF 3 D 2\n7 G 5 H\nE 1 B 4\n6 C 0 A\nF 2 D 3\n",
            16, true, true, 0, 32,
            std::nullopt},
        {"3-17-2", "non-bipartite, 3 colours, not orbit",
            "# pcg v1\nperiods (4,0) (0,6)\n1 3 3 2\n1 3 3 2\n2 2 1 1\n3 1 2 3\n3 1 2 3\n2 2 1 1\n",
            3, false, false, 1, 24,
            std::nullopt},
        {"3-17-3", "non-bipartite, 3 colours, not orbit",
            "# pcg v1\nperiods (4,0) (0,6)\n1 3 3 2\n1 2 1 2\n3 2 1 3\n3 1 2 3\n2 1 2 1\n2 3 3 1\n",
            3, false, false, 1, 24,
            std::nullopt},
        {"8-150-1", "non-bipartite, 8 colours, not orbit",
            "# pcg v1\nperiods (4,0) (0,4)\n1 6 6 7\n5 7 1 5\n4 2 8 4\n8 3 3 2\n",
            8, false, false, 0, 16,
            std::nullopt},
        {"8-150-2", "non-bipartite, 8 colours, orbit",
            "# pcg v1\nperiods (4,0) (0,4)\n1 7 2 8\n5 5 4 4\n7 1 8 2\n6 6 3 3\n",
            8, false, true, 0, 16,
            std::nullopt},    };
    return table;
}

auto pcg::fixtures::info(const string & id) -> const FixtureInfo &
{
    for (auto & f : list())
        if (f.id == id)
            return f;
    throw PreconditionError{"unknown fixture '" + id + "'"};
}

auto pcg::fixtures::get(const string & id) -> PeriodicColoring
{
    return parse(info(id).pcg);
}

auto pcg::fixtures::lemma2_family_b(int alpha) -> PeriodicColoring
{
    if (alpha < 5 || alpha == 6)
        throw PreconditionError{"alpha must be at least 5 and not 6"};
    vector<int> row;
    for (int x = 0; x < alpha; ++x)
        row.push_back(x + 1);
    return PeriodicColoring::from_ids(Lattice{alpha, 3 % alpha, 1}, row);
}

auto pcg::fixtures::checkerboard() -> PeriodicColoring
{
    return PeriodicColoring::from_ids(Lattice{2, 0, 2}, {1, 2, 2, 1});
}

auto pcg::fixtures::constant() -> PeriodicColoring
{
    return PeriodicColoring::from_ids(Lattice{1, 0, 1}, {1});
}

auto pcg::fixtures::stripes(int k) -> PeriodicColoring
{
    if (k < 1)
        throw PreconditionError{"stripes need at least one colour"};
    vector<int> row;
    for (int x = 0; x < k; ++x)
        row.push_back(x + 1);
    return PeriodicColoring::from_ids(Lattice{k, 0, 1}, row);
}
