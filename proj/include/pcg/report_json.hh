#pragma once

#include <pcg/coloring.hh>
#include <pcg/diagonals.hh>
#include <pcg/enumerator.hh>
#include <pcg/orbit.hh>
#include <pcg/perfectness.hh>
#include <pcg/twins.hh>

#include <json.hpp>

#include <vector>

namespace pcg
{
    /// {"periods":[[w,0],[s,h]],"rows":[["t",...],...]}
    auto to_json(const PeriodicColoring &) -> nlohmann::json;

    auto to_json(const QuotientMatrix &) -> nlohmann::json;

    auto to_json(const Violation &) -> nlohmann::json;

    /// {"perfect":bool,"quotient":[[...]]|null,"violation":{...}|null}
    auto to_json(const CheckResult &) -> nlohmann::json;

    /// {"covering":bool,"twins":[[a,b],...],"orbit":bool,"dichotomy":bool}
    auto to_json(const DichotomyReport &) -> nlohmann::json;

    /// {"orientation","residue","modulus","kind","colors"}
    auto to_json(const DiagonalDescriptor &) -> nlohmann::json;
    auto to_json(const std::vector<DiagonalDescriptor> &) -> nlohmann::json;

    /// {"orbit":bool,"num_orbits":k,"stabilizer_order":m,"counterexample_pair":[[x,y],[x',y']]|null}
    auto to_json(const OrbitReport &) -> nlohmann::json;

    auto to_json(const ClassificationReport &) -> nlohmann::json;
}
