#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tinv {

using Integer = boost::multiprecision::cpp_int;

}  // namespace tinv
