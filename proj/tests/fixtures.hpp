// Generated by tests/oracle/gen_fixtures.py -- do not edit by hand.
// Regenerate with: python3 tests/oracle/gen_fixtures.py > tests/fixtures.hpp
#pragma once

namespace critline::fixtures {

struct PointFixture {
  double zre, zim;
  double vre, vim;
};

// first three critical-line zero ordinates, from this script's bisection
inline constexpr double kZeroT1 = 14.134725141734694;
inline constexpr double kZeroT2 = 21.022039638771555;
inline constexpr double kZeroT3 = 25.010857580145689;

inline constexpr double kXiLine10 = -0.037967850310935684;
inline constexpr double kXiLine20 = 3.6655427755609457e-5;

// Taylor coefficients of zeta at 0: zeta(h) = c0 + c1*h + c2*h^2 + O(h^3)
inline constexpr double kZetaAt0C0 = -0.5;
inline constexpr double kZetaAt0C1 = -0.91893853320467274;
inline constexpr double kZetaAt0C2 = -1.0031782279542924;

// eta prefactor zero ordinate 2*pi/ln(2)
inline constexpr double kEtaPrefactorT1 = 9.0647202836543876;

inline constexpr PointFixture kCexp[] = {
    {1.0000000000000000, 1.0000000000000000, 1.4686939399158852, 2.2873552871788424},
    {0.0, 3.1415926535897932, -1.0000000000000000, 1.1419936994248698e-61},
    {-0.75000000000000000, 2.5000000000000000, -0.37843344792637787, 0.28269822362190972},
};

inline constexpr PointFixture kCcos[] = {
    {0.0, 1.0000000000000000, 1.5430806348152438, 0.0},
    {1.2000000000000000, -0.70000000000000000, 0.45482022236914777, 0.70702966009215377},
    {3.0000000000000000, 2.0000000000000000, -3.7245455049153226, -0.51182256998738461},
};

inline constexpr PointFixture kCpow2[] = {
    {0.0, 1.0000000000000000, 0.76923890136397213, 0.63896127631363480},
    {-1.5000000000000000, 4.2500000000000000, -0.34680351199866236, 0.068755538434322889},
};

inline constexpr PointFixture kGamma[] = {
    {1.0000000000000000, 0.0, 1.0000000000000000, 0.0},
    {5.0000000000000000, 0.0, 24.000000000000000, 0.0},
    {0.50000000000000000, 0.0, 1.7724538509055160, 0.0},
    {1.0000000000000000, 1.0000000000000000, 0.49801566811835604, -0.15494982830181069},
    {0.25000000000000000, 7.0674000000000000, 2.3131779121530589e-5, 1.8181588823801926e-6},
    {-4.3000000000000000, 2.2000000000000000, 0.00014139380508060201, 0.00022691595227621347},
    {-0.50000000000000000, 0.50000000000000000, -1.5814778282557300, -0.054850170827764777},
    {10.000000000000000, 40.000000000000000, -9.3193703491548885e-13, 2.1461951052926225e-12},
    {25.000000000000000, 25.000000000000000, -1.1135374386467985e+18, 8.8892714760098944e+18},
    {0.50000000000000000, 30.000000000000000, -8.3736476967132582e-21, 1.8665376522944921e-21},
    {-7.5000000000000000, 0.50000000000000000, 4.5841952214325533e-5, 7.8163123856439124e-5},
    {1.2500000000000000, 29.000000000000000, 3.9235172865250224e-19, 3.3477331780845552e-19},
    {6.2500000000000000, -14.500000000000000, 0.0012542754825452976, -0.0012454064508635921},
    {0.30000000000000000, 0.70000000000000000, 0.30968625674374913, -0.85678775293927050},
    {-2.5000000000000000, 0.0, -0.94530872048294188, 0.0},
    {3.5000000000000000, -3.5000000000000000, -0.15880541035750399, 0.57290325152368476},
};

inline constexpr PointFixture kZeta[] = {
    {2.0000000000000000, 0.0, 1.6449340668482264, 0.0},
    {4.0000000000000000, 0.0, 1.0823232337111382, 0.0},
    {0.50000000000000000, 0.0, -1.4603545088095868, 0.0},
    {1.5000000000000000, 0.0, 2.6123753486854883, 0.0},
    {1.1000000000000000, 0.0, 10.584448464950810, 0.0},
    {0.50000000000000000, 14.134725000000000, 1.7674298356433245e-8, -1.1102028894857664e-7},
    {2.0000000000000000, 3.0000000000000000, 0.79802198514627572, -0.11374430805293850},
    {0.50000000000000000, 50.000000000000000, -0.081712108320979975, 0.33079219403866130},
    {3.0000000000000000, -7.0000000000000000, 1.0142003689711159, -0.096125395858022432},
    {0.25000000000000000, 30.000000000000000, -0.58648278883921795, -0.61114963107644281},
    {8.0000000000000000, 100.00000000000000, 1.0036886821528954, -0.00079337881193051589},
    {0.10000000000000000, 95.000000000000000, 0.58030544683398562, 1.0618286234429112},
    {1.5000000000000000, 50.000000000000000, 0.66237495640224012, 0.19551118696072371},
    {6.0000000000000000, 21.000000000000000, 0.99280293436712462, -0.012924765045263244},
    {0.50000000000000000, 100.00000000000000, 2.6926198856813241, -0.020386029602598162},
    {0.35000000000000000, 8.5000000000000000, 1.3770842235288269, 0.32740157972906836},
    {10.000000000000000, 10.000000000000000, 1.0007784525949849, -0.00057360398555622477},
    {0.95000000000000000, 0.050000000000000000, -9.4264252153796101, -9.9963350673860465},
};

inline constexpr PointFixture kZetaCont[] = {
    {-1.0000000000000000, 0.0, -0.083333333333333333, 0.0},
    {-2.5000000000000000, 0.0, 0.0085169287778503305, 0.0},
    {-1.0000000000000000, 3.0000000000000000, 0.27412408467571930, 0.058777533260970817},
    {-7.0000000000000000, 7.0000000000000000, -3.2483692640442239, -5.9502217863461003},
    {-9.5000000000000000, 20.000000000000000, 157320.86256870045, 5088.4235453716151},
    {-0.50000000000000000, 0.50000000000000000, -0.14075746062427946, -0.15807638184744656},
    {0.0, 5.0000000000000000, 0.63307858403674984, 0.29065989971694939},
    {-3.9999500000000000, 2.0000000000000000e-5, 3.9919659668332958e-7, 1.5968196616618141e-7},
};

inline constexpr PointFixture kZetaPrefactor[] = {
    {1.0000000000000000, 9.0647202836543876, 1.3465749204399142, 0.10988197331441796},
    {1.0000000000000000, 9.0651202836543876, 1.3466213317320233, 0.10980402615312784},
    {1.0007000000000000, 9.0647202836543876, 1.3464411366297157, 0.10981001568836976},
    {1.0003931764117284, 9.0656288607338148, 1.3465966612349603, 0.10966237834370567},
};

inline constexpr PointFixture kXi[] = {
    {0.50000000000000000, 0.0, -0.49712077818831411, 0.0},
    {1.0000000000000000, 0.0, -0.50000000000000000, 0.0},
    {0.0, 0.0, -0.50000000000000000, 0.0},
    {0.30000000000000000, 7.0000000000000000, -0.15200945338940678, 0.010817164613535753},
    {0.70000000000000000, 7.0000000000000000, -0.15200945338940678, -0.010817164613535753},
    {0.20000000000000000, 5.0000000000000000, -0.27548263213617439, 0.019978306029123188},
    {-1.0000000000000000, 3.0000000000000000, -0.41627125989962381, 0.088823304965639391},
    {0.99000000000000000, 50.000000000000000, -5.1676933445082033e-15, 6.1104582471871246e-15},
    {0.50000000000000000, 21.000000000000000, 3.9774919877827035e-7, 1.6301300448084959e-67},
    {0.50000000000000000, 14.134725000000000, -1.9597928280872037e-10, 5.5885836580127097e-71},
    {1.0000500000000000, 2.0000000000000000e-5, -0.50000057741723523, -2.3098043356110248e-7},
    {-2.0000300000000000, 1.0000000000000000e-5, -0.57394186366156588, 6.5654381396890607e-7},
    {0.050000000000000000, 29.950000000000000, 1.0466237190356494e-8, -2.2365695025143666e-8},
    {10.900000000000000, 3.0000000000000000, -1.3106879003739227, -4.2105624883609813},
    {-9.9000000000000000, 2.0000000000000000, -3.1758400882549717, 3.5665866964653197},
    {0.50000000000000000, 60.000000000000000, 2.9092748239358864e-18, 3.1704667959489043e-78},
    {0.45000000000000000, 14.150000000000000, 2.2916861035261577e-5, 6.7895169204209525e-5},
};

}  // namespace critline::fixtures
