// Generated by tests/oracle/generate.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <array>

namespace oracle {

// Order: H, DELTA, PSI, J, I, T, KL, CHI2, B, W, DSTAR
inline constexpr std::array<double, 11> kWorked = {
    0.0340741737109317132502568,  // H
    0.1333333333333333333333333,  // DELTA
    0.5833333333333333333333333,  // PSI
    0.2746530721670274228488113,  // J
    0.0338220755686052300003736,  // I
    0.03484119247315162571182923,  // T
    0.1438410362258904637196095,  // KL
    0.3333333333333333333333333,  // CHI2
    0.9659258262890682867497432,  // B
    0.9333333333333333333333333,  // W
    0.1053986930843127328986978,  // DSTAR
};
inline constexpr double kWorkedKLReverse = 0.1308120359411369591292018;
inline constexpr double kWorkedChi2Reverse = 0.25;
inline constexpr double kWorkedDPsiT = 0.001617140860181707621504105;

inline constexpr std::array<double, 11> kThree = {
    0.05269568275187634272720381,  // H
    0.2018181818181818181818182,  // DELTA
    0.9702380952380952380952381,  // PSI
    0.4281537049250651823581169,  // J
    0.05191225923810351168014356,  // I
    0.05512616699316278390938566,  // T
    0.2007768010663520348544948,  // KL
    0.3916666666666666666666667,  // CHI2
    0.9473043172481236572727962,  // B
    0.8990909090909090909090909,  // W
    0.3693941430167470628997493,  // DSTAR
};
inline constexpr double kThreeKLReverse = 0.2273769038587131475036221;
inline constexpr double kThreeChi2Reverse = 0.5785714285714285714285714;
inline constexpr double kThreeDPsiT = 0.005513713959218168471566717;

inline constexpr std::array<double, 11> kSkewed = {
    0.998000001000000250000125,  // H
    1.999992000008,  // DELTA
    1999994.000002000002000002,  // PSI
    27.63096385388931635245282,  // J
    0.6931323650498873453097948,  // I
    6.214608598422441742803409,  // T
    13.81548192694465817622641,  // KL
    999997.000001000001000001,  // CHI2
    0.001999998999999749999875,  // B
    0.000003999996,  // W
    1999987000.027749982374996,  // DSTAR
};
inline constexpr double kSkewedKLReverse = 13.81548192694465817622641;
inline constexpr double kSkewedChi2Reverse = 999997.000001000001000001;
inline constexpr double kSkewedDPsiT = 124993.4103915265776832573;

// Order: F_H, F_DELTA, F_PSI, F_J, F_I, F_T, F_DSTAR; value, f', f'' at x
inline constexpr std::array<std::array<double, 3>, 7> kCatalogAt1_4 = {{
    {0.125000000000000000000000000000, -0.500000000000000000000000000000, 2.00000000000000000000000000000},
    {0.450000000000000000000000000000, -1.56000000000000000000000000000, 4.09600000000000000000000000000},
    {2.81250000000000000000000000000, -16.5000000000000000000000000000, 130.000000000000000000000000000},
    {1.03972077083991796412584818219, -4.38629436111989061883446424292, 20.0000000000000000000000000000},
    {0.120465473138598393677527614103, -0.458145365937077532591763605884, 1.60000000000000000000000000000},
    {0.139464719571381097353934431444, -0.638428224342895122116852454845, 3.40000000000000000000000000000},
    {2.53125000000000000000000000000, -28.6875000000000000000000000000, 367.875000000000000000000000000},
}};
inline constexpr std::array<std::array<double, 3>, 7> kCatalogAt4 = {{
    {0.500000000000000000000000000000, 0.250000000000000000000000000000, 0.0312500000000000000000000000000},
    {1.80000000000000000000000000000, 0.840000000000000000000000000000, 0.0640000000000000000000000000000},
    {11.2500000000000000000000000000, 6.93750000000000000000000000000, 2.03125000000000000000000000000},
    {4.15888308335967185650339272875, 2.13629436111989061883446424292, 0.312500000000000000000000000000},
    {0.481861892554393574710110456413, 0.235001814622867776825468515574, 0.0250000000000000000000000000000},
    {0.557858878285524389415737725775, 0.299071775657104877883147545155, 0.0531250000000000000000000000000},
    {10.1250000000000000000000000000, 9.70312500000000000000000000000, 5.74804687500000000000000000000},
}};
inline constexpr std::array<std::array<double, 3>, 7> kCatalogAt1000 = {{
    {468.877223398316206680011064556, 0.484188611699158103340005532278, 0.00000790569415042094832999723386108},
    {997.003996003996003996003996004, 0.999996007988015980023972031964, 0.00000000797604792011983222371235956053},
    {998999.001000000000000000000000, 1998.99999900000000000000000000, 2.00000000200000000000000000000},
    {6900.84752370315491500192038969, 7.90675527898213705205397436405, 0.00100100000000000000000000000000},
    {342.966036314053250487309585448, 0.346073840113430888125211361269, 0.000000499500499500499500499500499500},
    {1382.24584461173547826317051197, 1.63061497963210337488828222974, 0.000249750499500499500499500499500},
    {31496475.1054771846193354101495, 78867.2997761273046298974259150, 118.490496397594526651513495391},
}};

// Difference second derivatives, D1..D15 order, at x = 2 and x = 1/3
inline constexpr std::array<double, 15> kDiffD2At2 = {
    0.0364583333333333333333333333333,  // 7/192
    0.0468750000000000000000000000000,  // 3/64
    0.0522366523516815594498944547369,  // 
    0.0572916666666666666666666666667,  // 11/192
    0.0665509259259259259259259259259,  // 115/1728
    0.0104166666666666666666666666667,  // 1/96
    0.0157783190183482261165611214036,  // 
    0.0208333333333333333333333333333,  // 1/48
    0.0300925925925925925925925925926,  // 13/432
    0.00536165235168155944989445473689,  // 
    0.0104166666666666666666666666667,  // 1/96
    0.0196759259259259259259259259259,  // 17/864
    0.00505501431498510721677221192977,  // 
    0.0143142735742443664760314711890,  // 
    0.00925925925925925925925925925926,  // 1/108
};
inline constexpr std::array<double, 15> kDiffD2At1_3 = {
    1.62500000000000000000000000000,  // 13/8
    2.00000000000000000000000000000,  // 2
    2.20096189432334202985441524387,  // 
    2.37500000000000000000000000000,  // 19/8
    2.65625000000000000000000000000,  // 85/32
    0.375000000000000000000000000000,  // 3/8
    0.575961894323342029854415243871,  // 
    0.750000000000000000000000000000,  // 3/4
    1.03125000000000000000000000000,  // 33/32
    0.200961894323342029854415243871,  // 
    0.375000000000000000000000000000,  // 3/8
    0.656250000000000000000000000000,  // 21/32
    0.174038105676657970145584756129,  // 
    0.455288105676657970145584756129,  // 
    0.281250000000000000000000000000,  // 9/32
};

}  // namespace oracle
