// Frozen reference data: the published pi-function tables for the
// Gaussian null (m=2 and m=3, degrees 3..5), flattened to homogeneous
// (r-power, monomial) coefficient form and sign-canonicalized.
// Generated by an independent exact-arithmetic script; do not edit.
#pragma once
#include <array>
#include <cstddef>

namespace ellgof_test {

struct RefTerm { int rpow; std::array<int, 3> e; double c; };
struct RefEntry { int k; int j; int ell; std::size_t first; std::size_t count; };

inline constexpr RefTerm kRefTermsM2[] = {
    {3, {{1, 2, 0}}, 0.6123724356957946},
    {3, {{3, 0, 0}}, -0.20412414523193154},
    {3, {{0, 3, 0}}, -0.20412414523193154},
    {3, {{2, 1, 0}}, 0.6123724356957946},
    {1, {{1, 0, 0}}, 1.414213562373095},
    {3, {{1, 0, 0}}, -0.35355339059327373},
    {1, {{0, 1, 0}}, 1.414213562373095},
    {3, {{0, 1, 0}}, -0.35355339059327373},
    {4, {{0, 4, 0}}, -0.07216878364870323},
    {4, {{2, 2, 0}}, 0.4330127018922194},
    {4, {{4, 0, 0}}, -0.07216878364870323},
    {4, {{1, 3, 0}}, 0.2886751345948129},
    {4, {{3, 1, 0}}, -0.2886751345948129},
    {2, {{0, 2, 0}}, 0.8660254037844388},
    {2, {{2, 0, 0}}, -0.8660254037844388},
    {4, {{0, 2, 0}}, -0.14433756729740646},
    {4, {{2, 0, 0}}, 0.14433756729740646},
    {2, {{1, 1, 0}}, 1.7320508075688776},
    {4, {{1, 1, 0}}, -0.2886751345948129},
    {0, {{0, 0, 0}}, 1.0},
    {2, {{0, 0, 0}}, -1.0},
    {4, {{0, 0, 0}}, 0.125},
    {5, {{1, 4, 0}}, -0.1141088661469096},
    {5, {{3, 2, 0}}, 0.2282177322938192},
    {5, {{5, 0, 0}}, -0.02282177322938192},
    {5, {{0, 5, 0}}, -0.02282177322938192},
    {5, {{2, 3, 0}}, 0.2282177322938192},
    {5, {{4, 1, 0}}, -0.1141088661469096},
    {3, {{1, 2, 0}}, 1.2247448713915892},
    {3, {{3, 0, 0}}, -0.4082482904638631},
    {5, {{1, 2, 0}}, -0.15309310892394865},
    {5, {{3, 0, 0}}, 0.051031036307982884},
    {3, {{0, 3, 0}}, -0.4082482904638631},
    {3, {{2, 1, 0}}, 1.2247448713915892},
    {5, {{0, 3, 0}}, 0.051031036307982884},
    {5, {{2, 1, 0}}, -0.15309310892394865},
    {1, {{1, 0, 0}}, 1.7320508075688776},
    {3, {{1, 0, 0}}, -0.8660254037844388},
    {5, {{1, 0, 0}}, 0.07216878364870323},
    {1, {{0, 1, 0}}, 1.7320508075688776},
    {3, {{0, 1, 0}}, -0.8660254037844388},
    {5, {{0, 1, 0}}, 0.07216878364870323},
};
inline constexpr RefEntry kRefEntriesM2[] = {
    {3, 0, 1, 0, 2},
    {3, 0, 2, 2, 2},
    {3, 1, 1, 4, 2},
    {3, 1, 2, 6, 2},
    {4, 0, 1, 8, 3},
    {4, 0, 2, 11, 2},
    {4, 1, 1, 13, 4},
    {4, 1, 2, 17, 2},
    {4, 2, 1, 19, 3},
    {5, 0, 1, 22, 3},
    {5, 0, 2, 25, 3},
    {5, 1, 1, 28, 4},
    {5, 1, 2, 32, 4},
    {5, 2, 1, 36, 3},
    {5, 2, 2, 39, 3},
};

inline constexpr RefTerm kRefTermsM3[] = {
    {3, {{1, 0, 2}}, -0.15811388300841897},
    {3, {{1, 2, 0}}, 0.6324555320336759},
    {3, {{3, 0, 0}}, -0.15811388300841897},
    {3, {{0, 1, 2}}, 0.38729833462074165},
    {3, {{0, 3, 0}}, -0.2581988897471611},
    {3, {{2, 1, 0}}, 0.38729833462074165},
    {3, {{0, 0, 3}}, -0.15811388300841897},
    {3, {{0, 2, 1}}, 0.6324555320336759},
    {3, {{2, 0, 1}}, -0.15811388300841897},
    {3, {{1, 0, 2}}, 0.6123724356957946},
    {3, {{3, 0, 0}}, -0.20412414523193154},
    {3, {{0, 1, 2}}, 0.5},
    {3, {{2, 1, 0}}, -0.5},
    {3, {{0, 0, 3}}, -0.20412414523193154},
    {3, {{2, 0, 1}}, 0.6123724356957946},
    {3, {{1, 1, 1}}, 1.0},
    {1, {{1, 0, 0}}, 1.5811388300841898},
    {3, {{1, 0, 0}}, -0.31622776601683794},
    {1, {{0, 1, 0}}, 1.5811388300841898},
    {3, {{0, 1, 0}}, -0.31622776601683794},
    {1, {{0, 0, 1}}, 1.5811388300841898},
    {3, {{0, 0, 1}}, -0.31622776601683794},
    {4, {{0, 0, 4}}, -0.036596252735569997},
    {4, {{0, 2, 2}}, 0.29277002188455997},
    {4, {{0, 4, 0}}, -0.09759000729485333},
    {4, {{2, 0, 2}}, -0.07319250547113999},
    {4, {{2, 2, 0}}, 0.29277002188455997},
    {4, {{4, 0, 0}}, -0.036596252735569997},
    {4, {{0, 1, 3}}, -0.23145502494313785},
    {4, {{0, 3, 1}}, 0.3086066999241838},
    {4, {{2, 1, 1}}, -0.23145502494313785},
    {4, {{0, 0, 4}}, -0.0545544725589981},
    {4, {{0, 2, 2}}, 0.3273268353539886},
    {4, {{2, 2, 0}}, -0.3273268353539886},
    {4, {{4, 0, 0}}, 0.0545544725589981},
    {4, {{0, 1, 3}}, -0.20412414523193154},
    {4, {{2, 1, 1}}, 0.6123724356957946},
    {4, {{0, 0, 4}}, -0.07216878364870323},
    {4, {{2, 0, 2}}, 0.4330127018922194},
    {4, {{4, 0, 0}}, -0.07216878364870323},
    {4, {{1, 1, 2}}, -0.23145502494313785},
    {4, {{1, 3, 0}}, 0.3086066999241838},
    {4, {{3, 1, 0}}, -0.23145502494313785},
    {4, {{1, 0, 3}}, -0.1091089451179962},
    {4, {{1, 2, 1}}, 0.6546536707079772},
    {4, {{3, 0, 1}}, -0.1091089451179962},
    {4, {{1, 1, 2}}, 0.6123724356957946},
    {4, {{3, 1, 0}}, -0.20412414523193154},
    {4, {{1, 0, 3}}, 0.2886751345948129},
    {4, {{3, 0, 1}}, -0.2886751345948129},
    {2, {{0, 0, 2}}, -0.5400617248673217},
    {2, {{0, 2, 0}}, 1.0801234497346435},
    {2, {{2, 0, 0}}, -0.5400617248673217},
    {4, {{0, 0, 2}}, 0.07715167498104596},
    {4, {{0, 2, 0}}, -0.1543033499620919},
    {4, {{2, 0, 0}}, 0.07715167498104596},
    {2, {{0, 1, 1}}, 1.8708286933869709},
    {4, {{0, 1, 1}}, -0.2672612419124244},
    {2, {{0, 0, 2}}, 0.9354143466934854},
    {2, {{2, 0, 0}}, -0.9354143466934854},
    {4, {{0, 0, 2}}, -0.1336306209562122},
    {4, {{2, 0, 0}}, 0.1336306209562122},
    {2, {{1, 1, 0}}, 1.8708286933869709},
    {4, {{1, 1, 0}}, -0.2672612419124244},
    {2, {{1, 0, 1}}, 1.8708286933869709},
    {4, {{1, 0, 1}}, -0.2672612419124244},
    {0, {{0, 0, 0}}, 1.369306393762915},
    {2, {{0, 0, 0}}, -0.9128709291752768},
    {4, {{0, 0, 0}}, 0.09128709291752768},
    {5, {{0, 1, 4}}, -0.06099375455928333},
    {5, {{0, 3, 2}}, 0.16265001215808889},
    {5, {{0, 5, 0}}, -0.03253000243161777},
    {5, {{2, 1, 2}}, -0.12198750911856666},
    {5, {{2, 3, 0}}, 0.16265001215808889},
    {5, {{4, 1, 0}}, -0.06099375455928333},
    {5, {{0, 0, 5}}, -0.0157485197087178},
    {5, {{0, 2, 3}}, 0.1889822365046136},
    {5, {{0, 4, 1}}, -0.1259881576697424},
    {5, {{2, 0, 3}}, -0.0314970394174356},
    {5, {{2, 2, 1}}, 0.1889822365046136},
    {5, {{4, 0, 1}}, -0.0157485197087178},
    {5, {{0, 1, 4}}, -0.08333333333333333},
    {5, {{0, 3, 2}}, 0.16666666666666666},
    {5, {{2, 3, 0}}, -0.16666666666666666},
    {5, {{4, 1, 0}}, 0.08333333333333333},
    {5, {{0, 0, 5}}, 0.017010345435994292},
    {5, {{0, 2, 3}}, -0.13608276348795434},
    {5, {{2, 0, 3}}, -0.034020690871988585},
    {5, {{2, 2, 1}}, 0.4082482904638631},
    {5, {{4, 0, 1}}, -0.051031036307982884},
    {5, {{0, 1, 4}}, -0.07216878364870323},
    {5, {{2, 1, 2}}, 0.4330127018922194},
    {5, {{4, 1, 0}}, -0.07216878364870323},
    {5, {{0, 0, 5}}, -0.02282177322938192},
    {5, {{2, 0, 3}}, 0.2282177322938192},
    {5, {{4, 0, 1}}, -0.1141088661469096},
    {5, {{1, 0, 4}}, -0.0157485197087178},
    {5, {{1, 2, 2}}, 0.1889822365046136},
    {5, {{1, 4, 0}}, -0.1259881576697424},
    {5, {{3, 0, 2}}, -0.0314970394174356},
    {5, {{3, 2, 0}}, 0.1889822365046136},
    {5, {{5, 0, 0}}, -0.0157485197087178},
    {5, {{1, 1, 3}}, -0.16666666666666666},
    {5, {{1, 3, 1}}, 0.3333333333333333},
    {5, {{3, 1, 1}}, -0.16666666666666666},
    {5, {{1, 0, 4}}, -0.051031036307982884},
    {5, {{1, 2, 2}}, 0.4082482904638631},
    {5, {{3, 0, 2}}, -0.034020690871988585},
    {5, {{3, 2, 0}}, -0.13608276348795434},
    {5, {{5, 0, 0}}, 0.017010345435994292},
    {5, {{1, 1, 3}}, 0.2886751345948129},
    {5, {{3, 1, 1}}, -0.2886751345948129},
    {5, {{1, 0, 4}}, -0.1141088661469096},
    {5, {{3, 0, 2}}, 0.2282177322938192},
    {5, {{5, 0, 0}}, -0.02282177322938192},
    {3, {{0, 1, 2}}, 0.8215838362577491},
    {3, {{0, 3, 0}}, -0.5477225575051661},
    {3, {{2, 1, 0}}, 0.8215838362577491},
    {5, {{0, 1, 2}}, -0.09128709291752768},
    {5, {{0, 3, 0}}, 0.06085806194501845},
    {5, {{2, 1, 0}}, -0.09128709291752768},
    {3, {{0, 0, 3}}, -0.33541019662496846},
    {3, {{0, 2, 1}}, 1.3416407864998738},
    {3, {{2, 0, 1}}, -0.33541019662496846},
    {5, {{0, 0, 3}}, 0.03726779962499649},
    {5, {{0, 2, 1}}, -0.14907119849998596},
    {5, {{2, 0, 1}}, 0.03726779962499649},
    {3, {{0, 1, 2}}, 1.0606601717798212},
    {3, {{2, 1, 0}}, -1.0606601717798212},
    {5, {{0, 1, 2}}, -0.1178511301977579},
    {5, {{2, 1, 0}}, 0.1178511301977579},
    {3, {{0, 0, 3}}, -0.4330127018922194},
    {3, {{2, 0, 1}}, 1.2990381056766582},
    {5, {{0, 0, 3}}, 0.048112522432468816},
    {5, {{2, 0, 1}}, -0.14433756729740646},
    {3, {{1, 0, 2}}, -0.33541019662496846},
    {3, {{1, 2, 0}}, 1.3416407864998738},
    {3, {{3, 0, 0}}, -0.33541019662496846},
    {5, {{1, 0, 2}}, 0.03726779962499649},
    {5, {{1, 2, 0}}, -0.14907119849998596},
    {5, {{3, 0, 0}}, 0.03726779962499649},
    {3, {{1, 1, 1}}, 2.1213203435596424},
    {5, {{1, 1, 1}}, -0.2357022603955158},
    {3, {{1, 0, 2}}, 1.2990381056766582},
    {3, {{3, 0, 0}}, -0.4330127018922194},
    {5, {{1, 0, 2}}, -0.14433756729740646},
    {5, {{3, 0, 0}}, 0.048112522432468816},
    {1, {{1, 0, 0}}, 2.091650066335189},
    {3, {{1, 0, 0}}, -0.8366600265340756},
    {5, {{1, 0, 0}}, 0.05976143046671968},
    {1, {{0, 1, 0}}, 2.091650066335189},
    {3, {{0, 1, 0}}, -0.8366600265340756},
    {5, {{0, 1, 0}}, 0.05976143046671968},
    {1, {{0, 0, 1}}, 2.091650066335189},
    {3, {{0, 0, 1}}, -0.8366600265340756},
    {5, {{0, 0, 1}}, 0.05976143046671968},
};
inline constexpr RefEntry kRefEntriesM3[] = {
    {3, 0, 1, 0, 3},
    {3, 0, 2, 3, 3},
    {3, 0, 3, 6, 3},
    {3, 0, 4, 9, 2},
    {3, 0, 5, 11, 2},
    {3, 0, 6, 13, 2},
    {3, 0, 7, 15, 1},
    {3, 1, 1, 16, 2},
    {3, 1, 2, 18, 2},
    {3, 1, 3, 20, 2},
    {4, 0, 1, 22, 6},
    {4, 0, 2, 28, 3},
    {4, 0, 3, 31, 4},
    {4, 0, 4, 35, 2},
    {4, 0, 5, 37, 3},
    {4, 0, 6, 40, 3},
    {4, 0, 7, 43, 3},
    {4, 0, 8, 46, 2},
    {4, 0, 9, 48, 2},
    {4, 1, 1, 50, 6},
    {4, 1, 2, 56, 2},
    {4, 1, 3, 58, 4},
    {4, 1, 4, 62, 2},
    {4, 1, 5, 64, 2},
    {4, 2, 1, 66, 3},
    {5, 0, 1, 69, 6},
    {5, 0, 2, 75, 6},
    {5, 0, 3, 81, 4},
    {5, 0, 4, 85, 5},
    {5, 0, 5, 90, 3},
    {5, 0, 6, 93, 3},
    {5, 0, 7, 96, 6},
    {5, 0, 8, 102, 3},
    {5, 0, 9, 105, 5},
    {5, 0, 10, 110, 2},
    {5, 0, 11, 112, 3},
    {5, 1, 1, 115, 6},
    {5, 1, 2, 121, 6},
    {5, 1, 3, 127, 4},
    {5, 1, 4, 131, 4},
    {5, 1, 5, 135, 6},
    {5, 1, 6, 141, 2},
    {5, 1, 7, 143, 4},
    {5, 2, 1, 147, 3},
    {5, 2, 2, 150, 3},
    {5, 2, 3, 153, 3},
};

}  // namespace ellgof_test
