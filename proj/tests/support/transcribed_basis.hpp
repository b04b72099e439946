#pragma once

#include <array>
#include <string_view>

namespace solvlat::testing {

// Five reference generators for the (x, m, n) trace system, with doubled
// signs collapsed. Variables: x, m, n.
inline constexpr std::array<std::string_view, 5> kTranscribedBasis = {
    "-7*m^2 + m^3 - m^4 - m^5 - 13*m*n - m^2*n + 5*m^3*n - 3*m^4*n - 7*n^2 - m*n^2 + 10*m^2*n^2 + n^3 + 5*m*n^3 "
    "+ m^3*n^3 - n^4 - 3*m*n^4 - n^5",
    "-28*m + 4*m^2 - 4*m^3 - 4*m^4 - 20*n - 16*m*n + 29*m^2*n - 8*m^3*n - m^4*n - 8*n^2 + 8*m*n^2 + 17*m^2*n^2 "
    "- m^3*n^2 - 5*m*n^3 + 12*m^2*n^3 + 2*m^3*n^3 + m^4*n^3 - 10*n^4 - 12*m*n^4 - 2*m^2*n^4 + 3*m^3*n^4 - 6*n^5 "
    "- 12*m*n^5 + m^2*n^5 - 6*n^6 - m^2*n^6 + 2*n^7 + m*n^7 + 12*n*x + 8*n^2*x + 23*n^3*x + 9*n^4*x + 12*n^5*x "
    "+ n^7*x - n^8*x",
    "-52*m + 6*m^2 + 4*m^3 - 6*m^4 - 20*n - 68*m*n + 63*m^2*n - 14*m^3*n - m^4*n - 52*n^2 + 26*m*n^2 "
    "+ 24*m^2*n^2 + 3*m^3*n^2 + 3*m^4*n^2 + 16*n^3 - 13*m*n^3 - 4*m^2*n^3 + 9*m^3*n^3 - 18*n^4 - 39*m*n^4 "
    "+ 4*m^2*n^4 - 20*n^5 - m*n^5 - 3*m^2*n^5 + 6*n^6 + 3*m*n^6 + 40*m*x + 68*n*x + 18*n^2*x + 33*n^3*x "
    "+ 22*n^4*x + 2*n^5*x + 4*n^6*x - 3*n^7*x",
    "-20 - 26*m - 7*m^2 - 8*m^3 - 3*m^4 - 20*n + 36*m*n + 9*m^2*n - 7*m^3*n + 2*m^4*n + 24*n^2 + 33*m*n^2 "
    "- 18*m^2*n^2 + 4*m^3*n^2 - m^4*n^2 + 18*n^3 - 14*m*n^3 + 8*m^2*n^3 - 3*m^3*n^3 - 14*n^4 + 8*m*n^4 "
    "- 3*m^2*n^4 + 10*n^5 + 2*m*n^5 + m^2*n^5 - 2*n^6 - m*n^6 - 20*x + 4*n*x - 31*n^2*x + 9*n^3*x - 14*n^4*x "
    "+ 6*n^5*x - 3*n^6*x + n^7*x - 20*x^2 - 10*n*x^2 - 10*n^2*x^2",
    "40 - 52*m + 6*m^2 + 4*m^3 - 6*m^4 - 20*n - 68*m*n + 63*m^2*n - 14*m^3*n - m^4*n - 52*n^2 + 26*m*n^2 "
    "+ 24*m^2*n^2 + 3*m^3*n^2 + 3*m^4*n^2 + 16*n^3 - 13*m*n^3 - 4*m^2*n^3 + 9*m^3*n^3 - 18*n^4 - 39*m*n^4 "
    "+ 4*m^2*n^4 - 20*n^5 - m*n^5 - 3*m^2*n^5 + 6*n^6 + 3*m*n^6 + 68*n*x + 18*n^2*x + 33*n^3*x + 22*n^4*x "
    "+ 2*n^5*x + 4*n^6*x - 3*n^7*x + 40*n*x^2 - 40*x^3",
};

}  // namespace solvlat::testing
