#include <pcg/enumerator.hh>
#include <pcg/errors.hh>
#include <pcg/orbit.hh>

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <thread>

using std::array;
using std::set;
using std::string;
using std::vector;

using namespace pcg;

namespace
{
    constexpr int max_search_colors = 64;

    class Search
    {
    private:
        const SearchSpec & spec;
        Lattice lattice;
        int cells, colors;
        bool open_colors;

        vector<array<int, 4>> nbr;
        vector<int> order;

        vector<int> color;                 // 0 = unassigned
        vector<vector<int>> count;         // count[c][k]: neighbour slots of c coloured k
        vector<int> assigned_neighbours;   // filled slots, 0..4
        vector<vector<int>> row;           // row[k] fixed neighbour counts of colour k
        vector<bool> row_fixed;
        vector<int> uses;
        int used = 0;

        bool onto;
        int split_depth = -1, workers = 1, worker = 0;
        long prefix = 0;

        set<string> & results;

        auto within_row(int c) const -> bool
        {
            int k = color[c];
            if (! row_fixed[k])
                return true;
            for (int j = 1; j <= colors; ++j)
                if (count[c][j] > row[k][j])
                    return false;
            return true;
        }

        auto covering_ok(int c) const -> bool
        {
            if (count[c][color[c]] > 0)
                return false;
            for (int j = 1; j <= colors; ++j)
                if (count[c][j] > 1)
                    return false;
            return true;
        }

        // checks cell c after a change; may fix a row, recorded in fixed
        auto settle(int c, vector<int> & fixed) -> bool
        {
            if (color[c] == 0)
                return true;
            if (spec.coverings_only && ! covering_ok(c))
                return false;
            if (! within_row(c))
                return false;
            int k = color[c];
            if (assigned_neighbours[c] == 4 && ! row_fixed[k]) {
                row[k] = count[c];
                row_fixed[k] = true;
                fixed.push_back(k);
                for (int other = 0; other < cells; ++other)
                    if (color[other] == k && ! within_row(other))
                        return false;
            }
            return true;
        }

        auto assign(int c, int k, vector<int> & fixed) -> bool
        {
            color[c] = k;
            if (uses[k]++ == 0)
                ++used;
            for (int d = 0; d < 4; ++d) {
                ++count[nbr[c][d]][k];
                ++assigned_neighbours[nbr[c][d]];
            }
            if (! settle(c, fixed))
                return false;
            for (int d = 0; d < 4; ++d)
                if (! settle(nbr[c][d], fixed))
                    return false;
            return true;
        }

        auto unassign(int c, vector<int> & fixed) -> void
        {
            for (auto k : fixed) {
                row_fixed[k] = false;
            }
            fixed.clear();
            int k = color[c];
            for (int d = 0; d < 4; ++d) {
                --count[nbr[c][d]][k];
                --assigned_neighbours[nbr[c][d]];
            }
            if (--uses[k] == 0)
                --used;
            color[c] = 0;
        }

        auto leaf() -> void
        {
            int target = spec.quotient ? colors : spec.max_colors;
            if (onto && used != target)
                return;
            vector<int> ids(color.begin(), color.end());
            results.insert(canonical(PeriodicColoring::from_ids(lattice, ids)));
        }

        auto search(int depth) -> void
        {
            if (depth == split_depth && prefix++ % workers != worker)
                return;
            if (depth == cells) {
                leaf();
                return;
            }
            int target = spec.quotient ? colors : spec.max_colors;
            int c = order[depth];
            int highest = open_colors ? colors : std::min(colors, used + 1);
            vector<int> fixed;
            for (int k = 1; k <= highest; ++k) {
                bool fresh = uses[k] == 0;
                if (onto && target - (used + (fresh ? 1 : 0)) > cells - depth - 1)
                    continue;
                if (assign(c, k, fixed))
                    search(depth + 1);
                unassign(c, fixed);
            }
        }

    public:
        Search(const SearchSpec & s, set<string> & out) :
            spec(s),
            lattice(s.lattice),
            cells(int(s.lattice.index())),
            colors(s.quotient ? s.quotient->size() : s.max_colors),
            open_colors(s.quotient.has_value()),
            onto(s.surjective || s.quotient.has_value()),
            results(out)
        {
            nbr.resize(cells);
            for (int c = 0; c < cells; ++c) {
                auto nb = neighbors(lattice.cell(c));
                for (int d = 0; d < 4; ++d)
                    nbr[c][d] = lattice.cell_index(nb[d]);
            }

            // breadth-first order completes neighbourhoods early
            vector<bool> seen(cells, false);
            std::queue<int> todo;
            todo.push(0);
            seen[0] = true;
            while (! todo.empty()) {
                int c = todo.front();
                todo.pop();
                order.push_back(c);
                for (int m : nbr[c])
                    if (! seen[m]) {
                        seen[m] = true;
                        todo.push(m);
                    }
            }

            color.assign(cells, 0);
            count.assign(cells, vector<int>(colors + 1, 0));
            assigned_neighbours.assign(cells, 0);
            row.assign(colors + 1, vector<int>(colors + 1, 0));
            row_fixed.assign(colors + 1, false);
            uses.assign(colors + 1, 0);
            if (spec.quotient)
                for (int k = 1; k <= colors; ++k) {
                    for (int j = 1; j <= colors; ++j)
                        row[k][j] = (*spec.quotient)(k, j);
                    row_fixed[k] = true;
                }
        }

        auto run(int split, int worker_count, int worker_id) -> void
        {
            split_depth = split;
            workers = worker_count;
            worker = worker_id;
            prefix = 0;
            search(0);
        }
    };

    auto sorted(const set<string> & s) -> vector<string>
    {
        return vector<string>(s.begin(), s.end());
    }

    auto matches_quotient(const PeriodicColoring & f, const SearchSpec & spec) -> bool
    {
        auto r = check(f);
        auto s = std::get_if<QuotientMatrix>(&r);
        if (! s)
            return false;
        if (spec.quotient && *s != *spec.quotient)
            return false;
        if (spec.coverings_only && ! covering_target(*s))
            return false;
        return true;
    }
}

auto pcg::validate(const SearchSpec & spec) -> void
{
    if (spec.max_colors < 1)
        throw PreconditionError{"max_colors must be positive"};
    if (spec.max_colors > spec.lattice.index())
        throw PreconditionError{"max_colors exceeds the number of cells"};
    if (spec.max_colors > max_search_colors)
        throw PreconditionError{"too many colours"};
    if (spec.jobs < 1)
        throw PreconditionError{"jobs must be positive"};
    if (spec.quotient) {
        if (spec.quotient->size() > spec.max_colors)
            throw PreconditionError{"quotient has more colours than max_colors"};
        if (! is_well_formed(*spec.quotient))
            throw PreconditionError{"quotient rows must sum to 4 with a symmetric zero pattern"};
    }
}

auto pcg::enumerate_canonical(const SearchSpec & spec) -> vector<string>
{
    validate(spec);
    int cells = int(spec.lattice.index());
    if (spec.jobs == 1) {
        set<string> out;
        Search{spec, out}.run(-1, 1, 0);
        return sorted(out);
    }

    int split = std::min(cells, 4);
    vector<set<string>> parts(spec.jobs);
    vector<std::thread> threads;
    for (int w = 0; w < spec.jobs; ++w)
        threads.emplace_back([&, w] { Search{spec, parts[w]}.run(split, spec.jobs, w); });
    for (auto & t : threads)
        t.join();
    set<string> out;
    for (auto & p : parts)
        out.insert(p.begin(), p.end());
    return sorted(out);
}

auto pcg::enumerate(const SearchSpec & spec) -> vector<PeriodicColoring>
{
    vector<PeriodicColoring> result;
    for (auto & s : enumerate_canonical(spec))
        result.push_back(parse(s));
    return result;
}

auto pcg::brute_oracle(const SearchSpec & spec) -> vector<string>
{
    validate(spec);
    int cells = int(spec.lattice.index());
    int k = spec.quotient ? spec.quotient->size() : spec.max_colors;
    if (cells > 12 || k > 4)
        throw PreconditionError{"brute oracle is limited to 12 cells and 4 colours"};

    set<string> out;
    vector<int> ids(cells, 1);
    while (true) {
        set<int> distinct(ids.begin(), ids.end());
        bool onto = int(distinct.size()) == k;
        if (onto || (! spec.surjective && ! spec.quotient)) {
            // the quotient is compared against the labels as assigned, so
            // the labels must already be 1..k
            bool contiguous = *distinct.rbegin() == int(distinct.size());
            if (contiguous) {
                auto f = PeriodicColoring::from_ids(spec.lattice, ids);
                if (matches_quotient(f, spec))
                    out.insert(canonical(f));
            }
        }
        int i = 0;
        while (i < cells && ids[i] == k)
            ids[i++] = 1;
        if (i == cells)
            break;
        ++ids[i];
    }
    return sorted(out);
}

auto pcg::classify(const PeriodicColoring & f) -> ClassificationReport
{
    ClassificationReport report;
    report.canonical_form = canonical(f);
    report.maximal_periods = maximal_periods(f);
    report.bipartite = is_bipartite(f);
    report.special_diagonals = find_special_diagonals(f);
    report.orbit = is_orbit(f);

    auto r = check(f);
    if (auto v = std::get_if<Violation>(&r)) {
        report.violation = *v;
        return report;
    }
    auto & s = std::get<QuotientMatrix>(r);
    report.perfect = true;
    report.quotient = s;
    report.twins = twin_pairs(s);
    report.covering = covering_target(s).has_value();
    return report;
}
