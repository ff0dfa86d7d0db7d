#pragma once

// Frozen oracle values, computed with independent tooling (exact rational
// arithmetic and 50-digit floats) before the library code existed. Unit
// tests compare library output against these constants; they are not
// derived from the library itself.

namespace recfront::oracles {

// Roman harmonic numbers (exact rationals, as strings)
inline constexpr const char* kRoman_5_2 = "12019/3600";
inline constexpr const char* kRoman_10_3 = "21945415349/3200601600";

// expected counts (exact rationals)
inline constexpr const char* kErho_3_2 = "7/4";         // E rho_{3,2}
inline constexpr const char* kEiota_2_3 = "5/6";        // E iota_{2,3}
inline constexpr const char* kEiota_4_5 = "1107/4000";  // E iota_{4,5}
inline constexpr const char* kEiota_4_7 = "10419739/12348000";
inline constexpr const char* kEgamma_2_3 = "17/6";
inline constexpr const char* kEgamma_3_7 = "814501/88200";
inline constexpr const char* kEgamma_4_10 = "14374427393/533433600";

// float path at large n (50-digit reference, correctly rounded)
inline constexpr double kEgammaValue_4_1e6 = 2742.6977814328355;

// truncated expected record counts (quadrature reference, ~1e-11 rel)
inline constexpr double kErhoTrunc_3_1e5_c2 = 0.358828234116;
inline constexpr double kErhoTrunc_3_1e5_c3 = 0.0289438165055;

// probability bounds at d=3, n=1e6
inline constexpr double kMarkovHF_3_1e6_c2 = 0.5;  // exponent d-1-c vanishes
inline constexpr double kMarkovHF_3_1e6_c3 = 0.03619120683;
inline constexpr double kMarkovF_3_1e6_c4 = 0.288985945723;

// asymptotic expansion coefficients (12 digits)
inline constexpr double kA_3_1 = 1.154431329803;
inline constexpr double kA_3_2 = 2.978111990656;
inline constexpr double kA_4_1 = 0.231646994705;
inline constexpr double kA_4_2 = 4.202688977263;
inline constexpr double kA_4_3 = 3.477706470501;

inline constexpr double kEulerGammaRef = 0.57721566490153286;
inline constexpr double kZeta2 = 1.6449340668482264;  // pi^2/6
inline constexpr double kZeta3 = 1.2020569031595943;
inline constexpr double kZeta4 = 1.0823232337111382;  // pi^4/90

}  // namespace recfront::oracles
