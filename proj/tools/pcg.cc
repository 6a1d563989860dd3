#include <pcg/coloring.hh>
#include <pcg/diagonals.hh>
#include <pcg/enumerator.hh>
#include <pcg/errors.hh>
#include <pcg/fixtures.hh>
#include <pcg/orbit.hh>
#include <pcg/perfectness.hh>
#include <pcg/report_json.hh>
#include <pcg/twins.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using std::cerr;
using std::cout;
using std::string;
using std::vector;

using namespace pcg;

namespace
{
    // exit codes: 0 true / success, 1 false / violation, 2 usage or parse error
    constexpr int exit_true = 0, exit_false = 1, exit_usage = 2;

    auto read_coloring(const string & path) -> PeriodicColoring
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot read " + path};
        std::stringstream text;
        text << in.rdbuf();
        return parse(text.str());
    }

    auto write_text(const string & path, const string & text) -> void
    {
        std::ofstream out{path};
        if (! out || ! (out << text))
            throw ParseError{"cannot write " + path};
    }

    auto color_by_token(const PeriodicColoring & f, const string & token) -> ColorId
    {
        for (ColorId c = 1; c <= f.num_colors(); ++c)
            if (f.token(c) == token)
                return c;
        throw ParseError{"no colour '" + token + "'"};
    }

    auto print_matrix(const QuotientMatrix & s) -> void
    {
        for (auto & row : s.rows) {
            for (size_t j = 0; j < row.size(); ++j)
                cout << (j ? " " : "") << row[j];
            cout << "\n";
        }
    }

    auto describe(const PeriodicColoring & f, const Violation & v) -> string
    {
        std::ostringstream s;
        s << "not perfect: node " << v.node << " colour " << f.token(v.color) << " has neighbours";
        for (auto c : v.observed)
            s << " " << f.token(c);
        return s.str();
    }

    auto point(Vec2 v) -> string
    {
        std::ostringstream s;
        s << v;
        return s.str();
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Perfect colourings of the square grid"};
    app.require_subcommand(1);

    string file, file2, out_path, a_token, b_token, orientation = "right", quotient_file;
    bool json_out = false, report = false, at_most = false, coverings = false;
    Coord residue = 0, modulus = 1, offset = 0;
    Coord width = 1, height = 1, shear = 0;
    int colors = 1, jobs = 1;
    string fixture_id;

    auto verify = app.add_subcommand("verify", "check perfectness, print the quotient matrix or a violation");
    verify->add_option("file", file)->required();

    auto quot = app.add_subcommand("quotient", "print the quotient matrix");
    quot->add_option("file", file)->required();
    quot->add_flag("--json", json_out);

    auto classify_cmd = app.add_subcommand("classify", "summarise every property");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--json", json_out);

    auto twins = app.add_subcommand("twins", "list twin colour pairs; false when there are none");
    twins->add_option("file", file)->required();

    auto merge_cmd = app.add_subcommand("merge", "merge two twin colours, given by token");
    merge_cmd->add_option("file", file)->required();
    merge_cmd->add_option("a", a_token)->required();
    merge_cmd->add_option("b", b_token)->required();
    merge_cmd->add_option("-o", out_path)->required();

    auto equiv = app.add_subcommand("equiv", "decide equivalence of two colourings");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();

    auto orbit_cmd = app.add_subcommand("orbit", "decide whether colour classes are automorphism orbits");
    orbit_cmd->add_option("file", file)->required();

    auto diagonals = app.add_subcommand("diagonals", "classify the diagonal residue classes");
    diagonals->add_option("file", file)->required();

    auto shift = app.add_subcommand("shift", "shift a residue class of diagonals");
    shift->add_option("file", file)->required();
    shift->add_option("--orientation", orientation)->check(CLI::IsMember({"right", "left"}))->required();
    shift->add_option("--residue", residue)->required();
    shift->add_option("--modulus", modulus)->required();
    shift->add_option("--offset", offset)->required();
    shift->add_option("-o", out_path)->required();

    auto enumerate_cmd = app.add_subcommand("enumerate", "enumerate perfect colourings on a torus");
    enumerate_cmd->add_option("--width", width)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--shear", shear);
    enumerate_cmd->add_option("--colors", colors)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--quotient", quotient_file, "file holding a quotient matrix, one row per line");
    enumerate_cmd->add_flag("--report", report, "emit a JSON array of classification reports");
    enumerate_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--at-most", at_most, "allow fewer than --colors colours");
    enumerate_cmd->add_flag("--coverings", coverings, "keep only coverings");

    auto stationary_cmd = app.add_subcommand("stationary", "print the stationary vector of the quotient");
    stationary_cmd->add_option("file", file)->required();

    auto audit = app.add_subcommand("audit", "check that a covering is an orbit colouring or has twins");
    audit->add_option("file", file)->required();
    audit->add_flag("--json", json_out);

    auto fixture = app.add_subcommand("fixture", "built-in colourings");
    fixture->require_subcommand(1);
    auto fixture_list = fixture->add_subcommand("list");
    auto fixture_show = fixture->add_subcommand("show");
    fixture_show->add_option("id", fixture_id)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        cerr << "pcg: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            auto f = read_coloring(file);
            auto r = check(f);
            if (auto v = std::get_if<Violation>(&r)) {
                cout << describe(f, *v) << "\n";
                return exit_false;
            }
            cout << "perfect, " << f.num_colors() << " colours\n";
            print_matrix(std::get<QuotientMatrix>(r));
            return exit_true;
        }

        if (quot->parsed()) {
            auto f = read_coloring(file);
            auto r = check(f);
            if (json_out)
                cout << to_json(r).dump() << "\n";
            else if (auto s = std::get_if<QuotientMatrix>(&r))
                print_matrix(*s);
            else
                cout << describe(f, std::get<Violation>(r)) << "\n";
            return std::holds_alternative<QuotientMatrix>(r) ? exit_true : exit_false;
        }

        if (classify_cmd->parsed()) {
            auto f = read_coloring(file);
            auto r = classify(f);
            if (json_out) {
                cout << to_json(r).dump() << "\n";
                return r.perfect ? exit_true : exit_false;
            }
            cout << "colours: " << f.num_colors() << "\n";
            cout << "perfect: " << (r.perfect ? "yes" : "no") << "\n";
            if (r.quotient)
                print_matrix(*r.quotient);
            cout << "bipartite: " << (r.bipartite ? "yes" : "no") << "\n";
            cout << "twins:";
            for (auto & [a, b] : r.twins)
                cout << " " << f.token(a) << "-" << f.token(b);
            cout << "\ncovering: " << (r.covering ? "yes" : "no") << "\n";
            cout << "special diagonal classes: " << r.special_diagonals.size() << "\n";
            cout << "orbit: " << (r.orbit ? "yes" : "no") << "\n";
            cout << "maximal periods: " << to_string(r.maximal_periods) << "\n";
            return r.perfect ? exit_true : exit_false;
        }

        if (twins->parsed()) {
            auto f = read_coloring(file);
            auto pairs = twin_pairs(quotient(f));
            for (auto & [a, b] : pairs)
                cout << f.token(a) << " " << f.token(b) << "\n";
            return pairs.empty() ? exit_false : exit_true;
        }

        if (merge_cmd->parsed()) {
            auto f = read_coloring(file);
            try {
                auto merged = merge(f, color_by_token(f, a_token), color_by_token(f, b_token));
                write_text(out_path, render(merged));
            }
            catch (const NotTwin & e) {
                cerr << "pcg: " << e.what() << "\n";
                return exit_false;
            }
            return exit_true;
        }

        if (equiv->parsed()) {
            bool same = equivalent(read_coloring(file), read_coloring(file2));
            cout << (same ? "equivalent" : "not equivalent") << "\n";
            return same ? exit_true : exit_false;
        }

        if (orbit_cmd->parsed()) {
            auto r = orbit_report(read_coloring(file));
            cout << to_json(r).dump() << "\n";
            if (r.counterexample_pair)
                cout << "not an orbit colouring: " << point(r.counterexample_pair->first) << " and "
                     << point(r.counterexample_pair->second) << " lie in different orbits\n";
            return r.orbit ? exit_true : exit_false;
        }

        if (diagonals->parsed()) {
            cout << to_json(diagonal_classes(read_coloring(file))).dump() << "\n";
            return exit_true;
        }

        if (shift->parsed()) {
            auto o = orientation == "right" ? Orientation::Right : Orientation::Left;
            auto shifted = shift_residue_class(read_coloring(file), o, residue, modulus, offset);
            write_text(out_path, render(shifted));
            return exit_true;
        }

        if (enumerate_cmd->parsed()) {
            SearchSpec spec;
            spec.lattice = Lattice{width, floor_mod(shear, width), height};
            spec.max_colors = colors;
            spec.surjective = ! at_most;
            spec.coverings_only = coverings;
            spec.jobs = jobs;
            if (! quotient_file.empty()) {
                std::ifstream in{quotient_file};
                if (! in)
                    throw ParseError{"cannot read " + quotient_file};
                QuotientMatrix s;
                string line;
                while (std::getline(in, line)) {
                    if (line.empty() || line[0] == '#')
                        continue;
                    std::istringstream row{line};
                    vector<int> values;
                    int x;
                    while (row >> x)
                        values.push_back(x);
                    if (! row.eof())
                        throw ParseError{"bad quotient row: " + line};
                    s.rows.push_back(values);
                }
                spec.quotient = s;
            }
            auto results = enumerate(spec);
            if (report) {
                nlohmann::json out = nlohmann::json::array();
                for (auto & f : results)
                    out.push_back(to_json(classify(f)));
                cout << out.dump() << "\n";
            }
            else
                for (size_t i = 0; i < results.size(); ++i)
                    cout << (i ? "\n" : "") << render(results[i]);
            return exit_true;
        }

        if (stationary_cmd->parsed()) {
            auto f = read_coloring(file);
            auto p = stationary(quotient(f));
            for (ColorId c = 1; c <= f.num_colors(); ++c)
                cout << f.token(c) << " " << p[c - 1] << "\n";
            return exit_true;
        }

        if (audit->parsed()) {
            auto r = theorem1_audit(read_coloring(file));
            if (json_out)
                cout << to_json(r).dump() << "\n";
            else
                cout << "covering: " << (r.is_covering ? "yes" : "no") << "\norbit: " << (r.is_orbit ? "yes" : "no")
                     << "\ntwin pairs: " << r.twins.size() << "\ndichotomy: " << (r.dichotomy_holds ? "holds" : "fails") << "\n";
            return r.dichotomy_holds ? exit_true : exit_false;
        }

        if (fixture_list->parsed()) {
            for (auto & f : fixtures::list())
                cout << f.id << "\t" << f.summary << "\n";
            return exit_true;
        }

        if (fixture_show->parsed()) {
            cout << fixtures::info(fixture_id).pcg;
            return exit_true;
        }
    }
    catch (const ParseError & e) {
        cerr << "pcg: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const PreconditionError & e) {
        cerr << "pcg: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const NotPerfect & e) {
        cerr << "pcg: " << e.what() << "\n";
        return exit_false;
    }
    catch (const StationaryError & e) {
        cerr << "pcg: " << e.what() << "\n";
        return exit_false;
    }

    return exit_usage;
}
