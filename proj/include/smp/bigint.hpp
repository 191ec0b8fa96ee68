#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace smp {

// Exact arbitrary-precision count. All formula and census arithmetic is
// integral; nothing in this project rounds.
using BigCount = boost::multiprecision::cpp_int;

// Division that must be exact; a nonzero remainder indicates a transcribed
// formula is wrong, so it is treated as an internal error, not bad input.
inline BigCount exact_div(const BigCount& a, const BigCount& b) {
    BigCount q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw std::logic_error("exact_div: " + a.str() + " is not divisible by " + b.str());
    }
    return q;
}

}  // namespace smp
