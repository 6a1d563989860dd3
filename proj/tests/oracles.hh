#pragma once

// Brute-force reference computations used by the tests. They work from the PCG
// text and plain grid walks and share no code with the library beyond the
// Vec2 type.

#include <pcg/grid.hh>
#include <pcg/rational.hh>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle
{
    using pcg::Coord;
    using pcg::Rational;
    using pcg::Vec2;

    /// Tokens read straight off the PCG rows, with the two printed periods.
    struct Tiling
    {
        Vec2 p1, p2;
        std::vector<std::vector<std::string>> rows;

        auto width() const -> Coord { return Coord(rows[0].size()); }
        auto height() const -> Coord { return Coord(rows.size()); }

        /// Expects p1 = (w, 0) and p2 = (s, h) with h equal to the row count.
        auto at(Vec2 v) const -> const std::string &
        {
            while (v.y < 0)
                v = v + p2;
            while (v.y >= height())
                v = v - p2;
            Coord x = v.x % p1.x;
            if (x < 0)
                x += p1.x;
            return rows[size_t(v.y)][size_t(x)];
        }
    };

    inline auto read(const std::string & pcg) -> Tiling
    {
        std::istringstream in{pcg};
        std::string line;
        Tiling t;
        std::getline(in, line);
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            if (line.rfind("periods", 0) == 0) {
                long a, b, c, d;
                std::sscanf(line.c_str(), "periods (%ld,%ld) (%ld,%ld)", &a, &b, &c, &d);
                t.p1 = {a, b};
                t.p2 = {c, d};
                continue;
            }
            std::istringstream row{line};
            std::vector<std::string> tokens;
            std::string tok;
            while (row >> tok)
                tokens.push_back(tok);
            t.rows.push_back(tokens);
        }
        return t;
    }

    inline auto steps() -> std::vector<Vec2>
    {
        return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    }

    /// Neighbour-count rows keyed by token, from every node of a window
    /// covering two periods each way; empty if two nodes of a colour disagree.
    inline auto quotient(const Tiling & t) -> std::map<std::string, std::map<std::string, int>>
    {
        std::map<std::string, std::map<std::string, int>> rows;
        Coord span = 2 * std::max(t.width(), t.height()) + 2;
        for (Coord y = -span; y <= span; ++y)
            for (Coord x = -span; x <= span; ++x) {
                std::map<std::string, int> counts;
                for (auto d : steps())
                    ++counts[t.at(Vec2{x, y} + d)];
                auto & c = t.at({x, y});
                auto it = rows.find(c);
                if (it == rows.end())
                    rows.emplace(c, counts);
                else if (it->second != counts)
                    return {};
            }
        return rows;
    }

    /// Walks from v through the given token sequence, by depth-first search.
    inline auto walks(const Tiling & t, Vec2 v, const std::vector<std::string> & seq, size_t at = 0) -> std::uint64_t
    {
        if (at == seq.size())
            return 1;
        std::uint64_t total = 0;
        for (auto d : steps())
            if (t.at(v + d) == seq[at])
                total += walks(t, v + d, seq, at + 1);
        return total;
    }

    /// Walks of length k from v ending on the given token.
    inline auto walks_to(const Tiling & t, Vec2 v, const std::string & end, int k) -> std::uint64_t
    {
        if (k == 0)
            return t.at(v) == end ? 1 : 0;
        std::uint64_t total = 0;
        for (auto d : steps())
            total += walks_to(t, v + d, end, k - 1);
        return total;
    }

    /// Whether t is a period, checked on a window of two periods each way.
    inline auto is_period(const Tiling & tiling, Vec2 t) -> bool
    {
        Coord span = 2 * std::max(tiling.width(), tiling.height());
        for (Coord y = -span; y <= span; ++y)
            for (Coord x = -span; x <= span; ++x)
                if (tiling.at({x, y}) != tiling.at(Vec2{x, y} + t))
                    return false;
        return true;
    }

    /// Token frequencies over a window made of whole fundamental domains.
    inline auto densities(const Tiling & t) -> std::map<std::string, Rational>
    {
        std::map<std::string, std::int64_t> count;
        Coord w = t.width() * 3, h = t.height() * 2;
        for (Coord y = 0; y < h; ++y)
            for (Coord x = 0; x < w; ++x)
                ++count[t.at({x, y})];
        std::map<std::string, Rational> out;
        for (auto & [k, c] : count)
            out.emplace(k, Rational(c, w * h));
        return out;
    }

    /// Solves S^T-style detailed balance by Gaussian elimination: the unknowns
    /// P satisfy S(i,j) P(i) - S(j,i) P(j) = 0 for all i < j and sum P = 1.
    inline auto detailed_balance(const std::vector<std::vector<int>> & s) -> std::vector<Rational>
    {
        size_t n = s.size();
        std::vector<std::vector<Rational>> a;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                std::vector<Rational> row(n + 1, Rational{0});
                row[i] = s[i][j];
                row[j] = -s[j][i];
                a.push_back(row);
            }
        a.emplace_back(n + 1, Rational{1});

        size_t r = 0;
        std::vector<size_t> pivot_col;
        for (size_t c = 0; c < n && r < a.size(); ++c) {
            size_t p = r;
            while (p < a.size() && a[p][c] == Rational{0})
                ++p;
            if (p == a.size())
                continue;
            std::swap(a[p], a[r]);
            auto lead = a[r][c];
            for (auto & x : a[r])
                x /= lead;
            for (size_t q = 0; q < a.size(); ++q)
                if (q != r && a[q][c] != Rational{0}) {
                    auto f = a[q][c];
                    for (size_t k = 0; k <= n; ++k)
                        a[q][k] -= f * a[r][k];
                }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<Rational> p(n, Rational{0});
        for (size_t i = 0; i < pivot_col.size(); ++i)
            p[pivot_col[i]] = a[i][n];
        return p;
    }

    /// Colour-preserving point-plus-translation maps, checked on a window,
    /// with the translation part taken from the given box.
    inline auto symmetries_in_box(const Tiling & t, Coord box) -> int
    {
        int count = 0;
        Coord span = 2 * std::max(t.width(), t.height());
        for (auto & g : pcg::d4_elements())
            for (Coord ty = 0; ty < box; ++ty)
                for (Coord tx = 0; tx < box; ++tx) {
                    bool ok = true;
                    for (Coord y = -span; y <= span && ok; ++y)
                        for (Coord x = -span; x <= span && ok; ++x)
                            ok = t.at(g(Vec2{x, y}) + Vec2{tx, ty}) == t.at({x, y});
                    count += ok;
                }
        return count;
    }
}
