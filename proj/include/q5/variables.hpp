#pragma once

#include <cstdint>
#include <string>

namespace q5 {

/// Engine-wide variable identifier. The numbering is fixed so that monomial
/// comparison is canonical everywhere:
///   0..31   amplitudes A_{i1..i5} (index = binary value of i1..i5, i1 most significant)
///   32..41  binary pairs x0,x1,y0,y1,z0,z1,t0,t1,u0,u1
///   42..51  primed copies x'0 .. u'1
///   52..61  double-primed copies x''0 .. u''1
///   62      Hilbert series variable t
///   63..67  torus variables u1..u5
using Var = std::uint16_t;

inline constexpr int kSlots = 5;
inline constexpr int kAmplitudes = 32;

enum class Slot : int { x = 0, y = 1, z = 2, t = 3, u = 4 };

namespace var {

inline constexpr Var kAmpBase = 0;
inline constexpr Var kBinaryBase = 32;
inline constexpr Var kPrimedBase = 42;
inline constexpr Var kDoublePrimedBase = 52;
inline constexpr Var kSeriesT = 62;
inline constexpr Var kTorusBase = 63;
inline constexpr Var kCount = 68;

constexpr Var amp(int index) { return static_cast<Var>(kAmpBase + index); }
constexpr Var binary(int slot, int bit) { return static_cast<Var>(kBinaryBase + 2 * slot + bit); }
constexpr Var binary(Slot slot, int bit) { return binary(static_cast<int>(slot), bit); }
constexpr Var primed(int slot, int bit) { return static_cast<Var>(kPrimedBase + 2 * slot + bit); }
constexpr Var double_primed(int slot, int bit) { return static_cast<Var>(kDoublePrimedBase + 2 * slot + bit); }
constexpr Var series_t() { return kSeriesT; }
/// Torus variable u_i, i = 1..5.
constexpr Var torus(int i) { return static_cast<Var>(kTorusBase + i - 1); }

constexpr bool is_amplitude(Var v) { return v < kBinaryBase; }
constexpr bool is_binary(Var v) { return v >= kBinaryBase && v < kPrimedBase; }

std::string name(Var v);

}  // namespace var

char slot_letter(int slot);

}  // namespace q5
