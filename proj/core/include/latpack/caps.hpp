#pragma once

namespace latpack {

// Default limits on exhaustive work. Every operation that enumerates S_n or a
// family of matrices takes its cap as a parameter defaulting to these values.
inline constexpr int kEnumerationCap = 8;   // full S_n enumeration
inline constexpr int kPackOddCap = 9;
inline constexpr int kPackEvenCap = 8;
inline constexpr int kMolsCap = 17;
inline constexpr int kLatinSweepCap = 5;    // enumerate_latin_squares

}  // namespace latpack
