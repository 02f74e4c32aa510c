#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace schubert
