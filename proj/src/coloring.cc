#include <pcg/coloring.hh>
#include <pcg/errors.hh>
#include <pcg/kernels.hh>

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

using std::int32_t;
using std::map;
using std::string;
using std::string_view;
using std::vector;

using namespace pcg;

namespace
{
    auto is_integer_token(const string & t) -> bool
    {
        return ! t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    }

    auto natural_less(const string & a, const string & b) -> bool
    {
        bool ia = is_integer_token(a), ib = is_integer_token(b);
        if (ia != ib)
            return ia;
        if (ia) {
            auto strip = [](const string & t) { return t.substr(std::min(t.find_first_not_of('0'), t.size() - 1)); };
            auto sa = strip(a), sb = strip(b);
            if (sa.size() != sb.size())
                return sa.size() < sb.size();
            if (sa != sb)
                return sa < sb;
        }
        return a < b;
    }

    auto is_token_char(unsigned char c) -> bool
    {
        return std::isalnum(c) || c == '_';
    }

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto as_int32(const vector<ColorId> & cells) -> vector<int32_t>
    {
        return vector<int32_t>(cells.begin(), cells.end());
    }

    auto render_ids(const Lattice & l, const vector<ColorId> & ids, string & out) -> void
    {
        out.clear();
        out += "periods " + to_string(l) + "\n";
        for (Coord r = 0; r < l.height(); ++r) {
            for (Coord c = 0; c < l.width(); ++c) {
                if (c != 0)
                    out += ' ';
                out += std::to_string(ids[r * l.width() + c]);
            }
            out += '\n';
        }
    }
}

PeriodicColoring::PeriodicColoring(Lattice lattice, vector<ColorId> cells, vector<string> tokens) :
    _lattice(lattice),
    _cells(std::move(cells)),
    _tokens(std::move(tokens))
{
    if (Coord(_cells.size()) != _lattice.index())
        throw PreconditionError{"cell count does not match the lattice index"};
    int n = int(_tokens.size());
    vector<bool> seen(n + 1, false);
    for (auto c : _cells) {
        if (c < 1 || c > n)
            throw PreconditionError{"colour id " + std::to_string(c) + " out of range 1.." + std::to_string(n)};
        seen[c] = true;
    }
    for (int c = 1; c <= n; ++c)
        if (! seen[c])
            throw PreconditionError{"colour " + std::to_string(c) + " has empty support"};
}

auto PeriodicColoring::from_tokens(Lattice lattice, const vector<string> & cell_tokens) -> PeriodicColoring
{
    vector<string> tokens(cell_tokens.begin(), cell_tokens.end());
    std::sort(tokens.begin(), tokens.end(), natural_less);
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());

    map<string, ColorId> id;
    for (size_t i = 0; i < tokens.size(); ++i)
        id.emplace(tokens[i], ColorId(i + 1));

    vector<ColorId> cells;
    cells.reserve(cell_tokens.size());
    for (auto & t : cell_tokens)
        cells.push_back(id.at(t));
    return PeriodicColoring{lattice, std::move(cells), std::move(tokens)};
}

auto PeriodicColoring::from_ids(Lattice lattice, const vector<int> & cell_ids) -> PeriodicColoring
{
    std::set<int> distinct(cell_ids.begin(), cell_ids.end());
    map<int, ColorId> id;
    vector<string> tokens;
    for (auto v : distinct) {
        id.emplace(v, ColorId(tokens.size() + 1));
        tokens.push_back(std::to_string(tokens.size() + 1));
    }
    vector<ColorId> cells;
    cells.reserve(cell_ids.size());
    for (auto v : cell_ids)
        cells.push_back(id.at(v));
    return PeriodicColoring{lattice, std::move(cells), std::move(tokens)};
}

auto pcg::parse(string_view text) -> PeriodicColoring
{
    vector<string_view> lines;
    while (! text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        text = nl == string_view::npos ? string_view{} : text.substr(nl + 1);
    }

    if (lines.empty() || trim(lines[0]) != "# pcg v1")
        throw ParseError{"expected '# pcg v1' on the first line"};

    vector<string_view> body;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto l = trim(lines[i]);
        if (l.empty() || l.front() == '#')
            continue;
        body.push_back(l);
    }
    if (body.empty())
        throw ParseError{"missing periods line"};

    static const std::regex header{R"(periods\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))"};
    std::match_results<string_view::const_iterator> m;
    if (! std::regex_match(body[0].begin(), body[0].end(), m, header))
        throw ParseError{"malformed periods line: " + string(body[0])};

    Vec2 p1, p2;
    try {
        p1 = {std::stoll(m[1].str()), std::stoll(m[2].str())};
        p2 = {std::stoll(m[3].str()), std::stoll(m[4].str())};
    }
    catch (const std::out_of_range &) {
        throw ParseError{"period out of range"};
    }
    if (p1.x * p2.y - p1.y * p2.x == 0)
        throw ParseError{"periods have zero determinant"};
    auto lattice = Lattice::generated_by({p1, p2});
    if (lattice.index() > 1'000'000)
        throw ParseError{"fundamental domain too large"};

    if (Coord(body.size() - 1) != lattice.height())
        throw ParseError{"expected " + std::to_string(lattice.height()) + " rows for periods " + to_string(lattice) +
            ", got " + std::to_string(body.size() - 1)};

    vector<string> cell_tokens;
    for (size_t r = 1; r < body.size(); ++r) {
        std::istringstream row{string(body[r])};
        string t;
        Coord count = 0;
        while (row >> t) {
            if (! std::all_of(t.begin(), t.end(), is_token_char))
                throw ParseError{"bad colour token '" + t + "'"};
            cell_tokens.push_back(t);
            ++count;
        }
        if (count != lattice.width())
            throw ParseError{"row " + std::to_string(r - 1) + " has " + std::to_string(count) + " tokens, expected " +
                std::to_string(lattice.width())};
    }

    return PeriodicColoring::from_tokens(lattice, cell_tokens);
}

auto pcg::render(const PeriodicColoring & f) -> string
{
    auto & l = f.lattice();
    string out = "# pcg v1\nperiods " + to_string(l) + "\n";
    for (Coord r = 0; r < l.height(); ++r) {
        for (Coord c = 0; c < l.width(); ++c) {
            if (c != 0)
                out += ' ';
            out += f.token(f.cell_color(int(r * l.width() + c)));
        }
        out += '\n';
    }
    return out;
}

auto pcg::color_at(const PeriodicColoring & f, Vec2 v) -> ColorId
{
    return f.color_at(v);
}

auto pcg::retile(const PeriodicColoring & f, const Lattice & target) -> PeriodicColoring
{
    for (auto p : {target.p1(), target.p2()})
        for (int i = 0; i < f.num_cells(); ++i)
            if (f.color_at(f.cell(i) + p) != f.cell_color(i))
                throw PreconditionError{"lattice " + to_string(target) + " is not a lattice of periods"};

    vector<ColorId> cells(target.index());
    for (int i = 0; i < int(cells.size()); ++i)
        cells[i] = f.color_at(target.cell(i));
    return PeriodicColoring{target, std::move(cells), f.tokens()};
}

auto pcg::maximal_periods(const PeriodicColoring & f) -> Lattice
{
    auto & l = f.lattice();
    auto colors = as_int32(f.cells());
    int n = f.num_cells();

    vector<Vec2> generators{l.p1(), l.p2()};
    vector<int32_t> perm(n);
    for (int t = 1; t < n; ++t) {
        auto shift = l.cell(t);
        for (int i = 0; i < n; ++i)
            perm[i] = l.cell_index(l.cell(i) + shift);
        if (kernels::gather_mismatch(colors.data(), perm.data(), size_t(n)) == size_t(n))
            generators.push_back(shift);
    }
    return Lattice::generated_by(generators);
}

auto pcg::reduce_to_maximal(const PeriodicColoring & f) -> PeriodicColoring
{
    auto m = maximal_periods(f);
    return m == f.lattice() ? f : retile(f, m);
}

auto pcg::transform(const PeriodicColoring & f, const GridAutomorphism & a) -> PeriodicColoring
{
    auto image = f.lattice().transformed(a.point);
    auto back = inverse(a);
    vector<ColorId> cells(image.index());
    for (int i = 0; i < int(cells.size()); ++i)
        cells[i] = f.color_at(apply(back, image.cell(i)));
    return PeriodicColoring{image, std::move(cells), f.tokens()};
}

auto pcg::relabel(const PeriodicColoring & f, const ColorPermutation & p) -> PeriodicColoring
{
    int n = f.num_colors();
    if (int(p.image.size()) != n)
        throw PreconditionError{"permutation size does not match colour count"};
    vector<string> tokens(n);
    vector<bool> hit(n + 1, false);
    for (int c = 1; c <= n; ++c) {
        auto d = p(c);
        if (d < 1 || d > n || hit[d])
            throw PreconditionError{"not a permutation of the colours"};
        hit[d] = true;
        tokens[d - 1] = f.token(c);
    }
    vector<ColorId> cells(f.cells());
    for (auto & c : cells)
        c = p(c);
    return PeriodicColoring{f.lattice(), std::move(cells), std::move(tokens)};
}

auto pcg::canonical(const PeriodicColoring & f) -> string
{
    auto base = reduce_to_maximal(f);
    int n = base.num_cells();

    string best, candidate;
    vector<ColorId> ids(n), first(base.num_colors() + 1);
    for (auto & g : d4_elements()) {
        auto image = transform(base, GridAutomorphism{g, Vec2{}});
        auto & l = image.lattice();
        for (int t = 0; t < n; ++t) {
            auto shift = l.cell(t);
            std::fill(first.begin(), first.end(), 0);
            ColorId next = 0;
            for (int i = 0; i < n; ++i) {
                auto c = image.color_at(l.cell(i) + shift);
                if (first[c] == 0)
                    first[c] = ++next;
                ids[i] = first[c];
            }
            render_ids(l, ids, candidate);
            if (best.empty() || candidate < best)
                best.swap(candidate);
        }
    }
    return "# pcg v1\n" + best;
}

auto pcg::equivalent(const PeriodicColoring & f, const PeriodicColoring & g) -> bool
{
    if (f.num_colors() != g.num_colors())
        return false;
    return canonical(f) == canonical(g);
}

auto pcg::window(const PeriodicColoring & f, Vec2 origin, int width, int height) -> WindowColoring
{
    if (width < 1 || height < 1)
        throw PreconditionError{"window must be at least 1x1"};
    WindowColoring w{origin, width, height, vector<ColorId>(size_t(width) * height)};
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            w.cells[r * width + c] = f.color_at(origin + Vec2{c, r});
    return w;
}

auto pcg::densities(const PeriodicColoring & f) -> vector<Rational>
{
    vector<std::int64_t> count(f.num_colors(), 0);
    for (auto c : f.cells())
        ++count[c - 1];
    vector<Rational> result;
    for (auto k : count)
        result.emplace_back(k, f.num_cells());
    return result;
}
