#include <pcg/errors.hh>
#include <pcg/kernels.hh>
#include <pcg/perfectness.hh>

#include <algorithm>
#include <numeric>
#include <queue>

using std::int32_t;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using namespace pcg;

namespace
{
    auto counts_of(const Profile & p, int n) -> vector<int>
    {
        vector<int> row(n, 0);
        for (auto c : p)
            ++row[c - 1];
        return row;
    }

    auto check_color(ColorId c, int n, const char * what) -> void
    {
        if (c < 1 || c > n)
            throw PreconditionError{string{what} + " " + std::to_string(c) + " is not a colour"};
    }

    auto require_perfect(const PeriodicColoring & f) -> void
    {
        if (! is_perfect(f))
            throw NotPerfect{"colouring is not perfect"};
    }

    auto multiply(const vector<vector<uint64_t>> & a, const vector<vector<uint64_t>> & b) -> vector<vector<uint64_t>>
    {
        size_t n = a.size();
        vector<vector<uint64_t>> r(n, vector<uint64_t>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (a[i][k] != 0)
                    for (size_t j = 0; j < n; ++j)
                        r[i][j] += a[i][k] * b[k][j];
        return r;
    }
}

auto pcg::is_well_formed(const QuotientMatrix & s) -> bool
{
    int n = s.size();
    for (int i = 0; i < n; ++i) {
        if (int(s.rows[i].size()) != n)
            return false;
        if (std::accumulate(s.rows[i].begin(), s.rows[i].end(), 0) != 4)
            return false;
        for (int j = 0; j < n; ++j)
            if (s.rows[i][j] < 0 || ((s.rows[i][j] == 0) != (s.rows[j][i] == 0)))
                return false;
    }
    return true;
}

auto pcg::equal_up_to_permutation(const QuotientMatrix & s, const QuotientMatrix & t) -> bool
{
    int n = s.size();
    if (t.size() != n)
        return false;

    // backtrack over p with s(p(i), p(j)) = t(i, j), rows matched as multisets first
    auto sorted_row = [](const vector<int> & r) { auto c = r; std::sort(c.begin(), c.end()); return c; };
    vector<int> p(n, -1);
    vector<bool> used(n, false);
    auto extend = [&](auto & self, int i) -> bool {
        if (i == n)
            return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || s.rows[c][c] != t.rows[i][i] || sorted_row(s.rows[c]) != sorted_row(t.rows[i]))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = s.rows[c][p[j]] == t.rows[i][j] && s.rows[p[j]][c] == t.rows[j][i];
            if (! ok)
                continue;
            used[c] = true;
            p[i] = c;
            if (self(self, i + 1))
                return true;
            used[c] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

auto pcg::profile(const PeriodicColoring & f, Vec2 v) -> Profile
{
    Profile p;
    auto nb = neighbors(v);
    for (int d = 0; d < 4; ++d)
        p[d] = f.color_at(nb[d]);
    std::sort(p.begin(), p.end());
    return p;
}

auto pcg::check(const PeriodicColoring & f) -> CheckResult
{
    int n = f.num_colors();
    vector<optional<Profile>> seen(n);
    for (int i = 0; i < f.num_cells(); ++i) {
        auto v = f.cell(i);
        auto c = f.cell_color(i);
        auto p = profile(f, v);
        if (! seen[c - 1])
            seen[c - 1] = p;
        else if (*seen[c - 1] != p)
            return Violation{v, c, counts_of(*seen[c - 1], n), p};
    }

    QuotientMatrix s;
    for (auto & p : seen)
        s.rows.push_back(counts_of(*p, n));
    return s;
}

auto pcg::is_perfect(const PeriodicColoring & f) -> bool
{
    return std::holds_alternative<QuotientMatrix>(check(f));
}

auto pcg::quotient(const PeriodicColoring & f) -> QuotientMatrix
{
    auto r = check(f);
    if (auto v = std::get_if<Violation>(&r))
        throw NotPerfect{"colouring is not perfect: node (" + std::to_string(v->node.x) + "," + std::to_string(v->node.y) + ")"};
    return std::get<QuotientMatrix>(r);
}

auto pcg::path_count(const PeriodicColoring & f, Vec2 v, const vector<ColorId> & colors) -> uint64_t
{
    if (colors.empty())
        throw PreconditionError{"colour sequence must be nonempty"};
    if (colors.size() > 31)
        throw PreconditionError{"colour sequence longer than 31"};
    for (auto c : colors)
        check_color(c, f.num_colors(), "colour");
    require_perfect(f);

    // walks in the grid project one to one onto walks in the torus graph,
    // counting parallel edges and loops with multiplicity
    auto & l = f.lattice();
    size_t n = size_t(f.num_cells());
    vector<int32_t> nbrs(4 * n);
    for (size_t i = 0; i < n; ++i) {
        auto nb = neighbors(l.cell(int(i)));
        for (size_t d = 0; d < 4; ++d)
            nbrs[d * n + i] = l.cell_index(nb[d]);
    }
    vector<int32_t> cell_colors(f.cells().begin(), f.cells().end());

    vector<uint64_t> cur(n, 0), next(n, 0);
    cur[l.cell_index(v)] = 1;
    for (auto c : colors) {
        kernels::walk_step(cur.data(), next.data(), nbrs.data(), cell_colors.data(), c, n);
        cur.swap(next);
    }
    return std::accumulate(cur.begin(), cur.end(), uint64_t{0});
}

auto pcg::path_product(const QuotientMatrix & s, ColorId b, const vector<ColorId> & colors) -> uint64_t
{
    check_color(b, s.size(), "colour");
    uint64_t product = 1;
    for (auto c : colors) {
        check_color(c, s.size(), "colour");
        product *= uint64_t(s(b, c));
        b = c;
    }
    return product;
}

auto pcg::dk(const QuotientMatrix & s, ColorId b, ColorId b2, int k) -> uint64_t
{
    check_color(b, s.size(), "colour");
    check_color(b2, s.size(), "colour");
    if (k < 0 || k > 31)
        throw PreconditionError{"walk length must be in 0..31"};

    size_t n = size_t(s.size());
    vector<vector<uint64_t>> power(n, vector<uint64_t>(n, 0)), base(n, vector<uint64_t>(n));
    for (size_t i = 0; i < n; ++i) {
        power[i][i] = 1;
        for (size_t j = 0; j < n; ++j)
            base[i][j] = uint64_t(s.rows[i][j]);
    }
    for (; k > 0; k >>= 1) {
        if (k & 1)
            power = multiply(power, base);
        base = multiply(base, base);
    }
    return power[b - 1][b2 - 1];
}

auto pcg::stationary(const QuotientMatrix & s) -> vector<Rational>
{
    int n = s.size();
    if (n == 0)
        throw StationaryError{"empty matrix"};

    // P(j) = P(i) S(i, j) / S(j, i) along a spanning tree, then every other
    // edge is checked
    vector<optional<Rational>> p(n);
    p[0] = Rational{1};
    std::queue<int> todo;
    todo.push(0);
    while (! todo.empty()) {
        int i = todo.front();
        todo.pop();
        for (int j = 0; j < n; ++j) {
            if (s.rows[i][j] == 0)
                continue;
            if (s.rows[j][i] == 0)
                throw StationaryError{"S(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") > 0 but the reverse entry is 0"};
            Rational pj = *p[i] * Rational(s.rows[i][j], s.rows[j][i]);
            if (! p[j]) {
                p[j] = pj;
                todo.push(j);
            }
            else if (*p[j] != pj)
                throw StationaryError{"detailed balance fails on colours " + std::to_string(i + 1) + " and " + std::to_string(j + 1)};
        }
    }

    Rational total{0};
    for (int i = 0; i < n; ++i) {
        if (! p[i])
            throw StationaryError{"colour graph is not connected"};
        total += *p[i];
    }
    vector<Rational> result;
    for (auto & x : p)
        result.push_back(*x / total);
    return result;
}

auto pcg::node_type(const PeriodicColoring & f, Vec2 v, ColorId a, ColorId b) -> NodeType
{
    check_color(a, f.num_colors(), "colour");
    check_color(b, f.num_colors(), "colour");
    if (a == b)
        throw PreconditionError{"node type needs two distinct colours"};
    auto p = profile(f, v);
    return {int(std::count(p.begin(), p.end(), a)), int(std::count(p.begin(), p.end(), b))};
}

auto pcg::is_bipartite(const PeriodicColoring & f) -> bool
{
    auto & l = f.lattice();
    // an odd period puts every colour on both parities
    if (parity(l.p1()) == Parity::Odd || parity(l.p2()) == Parity::Odd)
        return false;
    vector<int> side(f.num_colors() + 1, -1);
    for (int i = 0; i < f.num_cells(); ++i) {
        int q = parity(f.cell(i)) == Parity::Even ? 0 : 1;
        auto c = f.cell_color(i);
        if (side[c] == -1)
            side[c] = q;
        else if (side[c] != q)
            return false;
    }
    return true;
}

auto pcg::refine_bipartite(const PeriodicColoring & f) -> PeriodicColoring
{
    if (is_bipartite(f))
        return f;

    auto & l = f.lattice();
    vector<Vec2> even;
    for (auto p : {l.p1(), l.p2(), l.p1() + l.p2(), 2 * l.p1(), 2 * l.p2()})
        if (parity(p) == Parity::Even)
            even.push_back(p);
    auto e = Lattice::generated_by(even);

    int n = f.num_colors();
    vector<int> mask(n + 1, 0);
    for (int i = 0; i < e.index(); ++i) {
        auto v = e.cell(i);
        mask[f.color_at(v)] |= parity(v) == Parity::Even ? 1 : 2;
    }

    vector<string> tokens;
    for (int i = 0; i < e.index(); ++i) {
        auto v = e.cell(i);
        auto c = f.color_at(v);
        if (mask[c] == 3)
            tokens.push_back(f.token(c) + (parity(v) == Parity::Even ? "e" : "o"));
        else
            tokens.push_back(f.token(c));
    }
    return PeriodicColoring::from_tokens(e, tokens);
}

auto pcg::verify_window(const WindowColoring & w, const QuotientMatrix & s) -> vector<Violation>
{
    vector<Violation> result;
    for (int r = 0; r < w.height; ++r)
        for (int c = 0; c < w.width; ++c) {
            Vec2 v = w.origin + Vec2{c, r};
            auto colour = w.at(v);
            if (colour == 0)
                continue;
            Profile p;
            bool interior = true;
            auto nb = neighbors(v);
            for (int d = 0; d < 4 && interior; ++d) {
                p[d] = w.at(nb[d]);
                interior = p[d] != 0;
            }
            if (! interior)
                continue;
            std::sort(p.begin(), p.end());
            if (colour > s.size() || std::any_of(p.begin(), p.end(), [&](ColorId x) { return x > s.size(); })) {
                result.push_back(Violation{v, colour, std::nullopt, p});
                continue;
            }
            auto counts = counts_of(p, s.size());
            if (counts != s.rows[colour - 1])
                result.push_back(Violation{v, colour, s.rows[colour - 1], p});
        }
    return result;
}
