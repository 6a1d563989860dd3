#pragma once

#include <boost/rational.hpp>

#include <cstdint>

namespace pcg
{
    using Rational = boost::rational<std::int64_t>;
}
