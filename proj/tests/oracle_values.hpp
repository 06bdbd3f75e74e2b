#pragma once

// Generated by tests/oracle/make_oracle.py (mpmath, 50 digits). Do not edit.

#include <array>

namespace oracle {

inline constexpr double kLiHLambdaM3 = 5.1430586792626142466e+1;
inline constexpr double kLiHGroundDefault = -2.4673101007896496697;
inline constexpr double kI2Lambda5 = 5.8283997383853345383e+2;
inline constexpr double kCalibratedAmu = 9.3150199996555882728e+8;
inline constexpr double kLiH553Calibrated = -2.0359235246683686532;
inline constexpr double kEvPerWavenumberCalibrated = 1.2398499999011372591e-4;
inline constexpr double kCO54ModifiedCalibrated = 5.4392972528031738817e-1;
inline constexpr double kQcLambda1 = -1.3012902845685730086;
inline constexpr double kQcLambda1e6 = -1.5707959340960112699;
inline constexpr double kCoulombJ1Half = 4.6526913586269795717;
inline constexpr std::array<double, 11> kCoulombJSeries0p5 = {1.3293403881791370205, 4.6526913586269795717, 9.1392151687315670158, 1.4539660495709311161e+1, 2.0719016206385768405e+1, 2.7589005790608417929e+1, 3.5086018233708531496e+1, 4.3161371636704939539e+1, 5.1776242185160159326e+1, 6.0898722951116949303e+1, 7.0501983108793083616e+1};
inline constexpr std::array<double, 11> kCoulombJSeries3p7 = {7.2527634520222929046e+1, 4.8593515128549362461e+2, 1.7983226979289275257e+3, 4.9395308128170426942e+3, 1.1285904630499500118e+4, 2.2729989656607575907e+4, 4.1746383497436068268e+4, 7.14545241574164491e+4, 1.1567895190965701743e+5, 1.7900743449294160792e+5, 2.6684725003553528944e+5};

}  // namespace oracle
