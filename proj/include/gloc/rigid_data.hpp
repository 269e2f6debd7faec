#pragma once
// Bundled localization edges between finite simple groups. Verified edges
// record runs of the engine in this repository; asserted edges carry their
// source: conditions checkable in the ATLAS unless a reference is given.

#include <string_view>

namespace gloc {

inline constexpr std::string_view kRigidData = R"EDGES(
node M

# alternating chain, with the Tits detour around the A6 -> A7 gap
edge A5 A6 verified engine
edge A6 T asserted ATLAS
edge T Ru asserted ATLAS
edge L2_13 Ru asserted ATLAS
edge L2_13 A14 verified engine
edge A7 A8 verified engine
edge A8 A9 asserted Lib99
edge A9 A10 asserted Lib99
edge A10 A11 asserted Lib99
edge A11 A12 asserted Lib99
edge A12 A13 asserted Lib99
edge A13 A14 asserted Lib99
# consecutive bundled degrees of the A_n chain; each line stands for the
# composite of the one-step inclusions between them
edge A14 A22 asserted Lib99
edge A22 A23 asserted Lib99
edge A23 A24 asserted Lib99
edge A24 A28 asserted Lib99
edge A28 A100 asserted Lib99
edge A100 A120 asserted Lib99
edge A120 A266 asserted Lib99
edge A266 A275 asserted Lib99
edge A275 A276 asserted Lib99
edge A276 A1782 asserted Lib99
edge A1782 A2058 asserted Lib99
edge A2058 A2300 asserted Lib99
edge A2300 A3510 asserted Lib99
edge A3510 A4060 asserted Lib99
edge A4060 A6156 asserted Lib99
edge A6156 A31671 asserted Lib99
edge A31671 A98280 asserted Lib99
edge A98280 A1140000 asserted Lib99
edge A1140000 A8835156 asserted Lib99
edge A8835156 A173067389 asserted Lib99

# linear and unitary groups reaching the alternating chain
edge L2_8 A9 verified engine
edge U3_3 A28 verified engine
edge L2_7 U3_3 asserted ATLAS
edge L2_11 M22 asserted ATLAS
edge A7 U3_5 asserted ATLAS

# twenty sporadic groups on the cosets of a largest maximal subgroup
edge M11 A11 verified engine
edge M22 A22 asserted ATLAS
edge M23 A23 asserted ATLAS
edge M24 A24 asserted ATLAS
edge J1 A266 asserted ATLAS
edge J2 A100 asserted ATLAS
edge J3 A6156 asserted ATLAS
edge J4 A173067389 asserted KW88
edge HS A100 asserted ATLAS
edge McL A275 asserted ATLAS
edge Co1 A98280 asserted ATLAS
edge Co2 A2300 asserted ATLAS
edge Co3 A276 asserted ATLAS
edge Suz A1782 asserted ATLAS
edge He A2058 asserted ATLAS
edge Ru A4060 asserted ATLAS
edge Fi22 A3510 asserted ATLAS
edge Fi23 A31671 asserted KPW89
edge HN A1140000 asserted ATLAS
edge Ly A8835156 asserted ATLAS

# remaining sporadic groups
edge M11 M12 asserted ATLAS
edge He Fi24' asserted LW91
edge Fi23 B asserted WilsonBaby
edge Th B asserted WilsonBaby
edge HN B asserted WilsonBaby
edge L2_11 B asserted WilsonBaby
edge M11 ON asserted WilsonON

# Suzuki chain and other Chevalley groups
edge U3_3 J2 asserted ATLAS
edge J2 G2_4 asserted ATLAS
edge G2_4 Suz asserted ATLAS
edge L2_13 G2_4 asserted ATLAS
edge L3_3 Suz asserted WilsonSuz
edge U5_2 Suz asserted WilsonSuz
edge A9 D4_2 asserted ATLAS
edge D4_2 F4_2 asserted ATLAS
edge 3D4_2 F4_2 asserted LS87
edge A8 S6_2 asserted ATLAS
edge S4_4 He asserted ATLAS
edge S8_2 A120 asserted ATLAS
edge U4_2 S6_2 asserted ATLAS
edge 2D4_2 S8_2 asserted ATLAS
edge L2_11 U5_2 asserted ATLAS
edge L3_3 T asserted ATLAS
edge L2_7 L3_11 asserted ATLAS
edge L4_3 F4_2 asserted ATLAS
edge U3_3 G2_5 asserted ATLAS
edge L3_5 G2_5 asserted LS87
edge L3_11 G2_11 asserted LS87
edge M22 U6_2 asserted ATLAS
edge A12 2D5_2 asserted ATLAS
edge A7 U4_3 asserted ATLAS
edge J3 E6_4 asserted KW90a
edge D4_2 D4_3 asserted ATLAS

# Mathieu, Conway, and Fischer families
edge M11 M23 asserted ATLAS
edge M23 M24 asserted ATLAS
edge M12 M24 asserted ATLAS
edge M22 M24 asserted ATLAS
edge Co2 Co1 asserted ATLAS
edge Co3 Co1 asserted ATLAS
edge HS Co2 asserted ATLAS
edge McL Co3 asserted ATLAS
edge M22 HS asserted ATLAS
edge M23 Co3 asserted ATLAS
edge M23 Co2 asserted ATLAS
edge M11 HS asserted ATLAS
edge T Fi22 asserted ATLAS
edge M12 Fi22 asserted ATLAS
edge A10 Fi22 asserted ATLAS
edge A10 S8_2 asserted ATLAS
edge S8_2 Fi23 asserted ATLAS
edge A12 Fi23 asserted KPW89
edge M11 J4 asserted KW88
edge M23 J4 asserted KW88

# further localizations
edge A12 HN asserted ATLAS
edge A7 Suz asserted WilsonSuz
edge L2_8 S6_2 asserted ATLAS
edge L2_13 G2_3 asserted ATLAS
edge L2_32 J4 asserted KW88
edge U3_3 S6_2 asserted ATLAS
edge 3D4_2 Th asserted ATLAS
edge G2_5 Ly asserted ATLAS

# satellite components not known to reach the alternating chain
edge E6_2 E7_2 asserted LS87
edge E6_3 E7_3 asserted LS87
edge Sz_32 E8_5 asserted SWW00

zigzag A6 > T > Ru < L2_13 > A14 < A13 < A12 < A11 < A10 < A9 < A8 < A7
)EDGES";

}  // namespace gloc
