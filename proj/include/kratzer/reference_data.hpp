#pragma once

// Reference energies, embedded so table runs need no data files.
// Columns are "<molecule>:<method>"; tables without a D column are 3D.

#include <array>
#include <string_view>

namespace kratzer::reference {

struct TableAsset {
  int id;
  std::string_view potential;  ///< "kratzer" or "modified"
  std::string_view title;
  std::string_view csv;
};

inline constexpr std::string_view kTable2Csv = R"csv(n,l,LiH:EQR,I2:EQR,I2:AIM,O2:EQR,O2:AIM
0,0,-2.467310304097,-1.579082576525,-1.579082577,-5.126358620071,-5.126358625
1,0,-2.375819214406,-1.573687150333,-1.573687151,-5.066641146718,-5.066641151
1,1,-2.374107972668,-1.573677924919,-1.573677925,-5.066292321402,-5.066292323
2,0,-2.289324266253,-1.568319329698,-1.568319330,-5.007961110233,-5.007961116
2,1,-2.287705602815,-1.568310151445,-1.568310152,-5.007618327191,-5.007618329
2,2,-2.284475215373,-1.568291795200,-1.568291796,-5.006932902380,-5.006932904
3,0,-2.207468200275,-1.562978926616,-1.562978927,-4.950294618656,-4.950294624
3,1,-2.205935555783,-1.562969795203,-1.562969796,-4.949957739138,-4.949957740
3,2,-2.202876749755,-1.562951532697,-1.562951533,-4.949284118344,-4.949284119
3,3,-2.198304679122,-1.562924139740,-1.562924140,-4.948274032620,-4.948274034
4,0,-2.129925128672,-1.557665754681,-1.557665755,-4.893618463868,-4.893618469
4,1,-2.128472514560,-1.557656669790,-1.557656670,-4.893287353086,-4.893287355
4,2,-2.125573350591,-1.557638500327,-1.557638501,-4.892625266816,-4.892625268
4,3,-2.121239701434,-1.557611246928,-1.557611247,-4.891632475505,-4.891632476
4,4,-2.115489505754,-1.557574910549,-1.557574911,-4.890309384483,-4.890309388
5,0,-2.056397286593,-1.552379629069,-1.552379630,-4.837910098245,-4.837910103
5,1,-2.055019226505,-1.552370590385,-1.552370591,-4.837584625235,-4.837584627
5,2,-2.052268785922,-1.552352513333,-1.552352514,-4.836933811639,-4.836933812
5,3,-2.048157264859,-1.552325398546,-1.552325399,-4.835957922172,-4.835957923
5,4,-2.042701466576,-1.552289246974,-1.552289248,-4.834657353568,-4.834657357
5,5,-2.035923524667,-1.552244059882,-1.552244060,-4.833032634174,-4.833032637
)csv";

inline constexpr std::string_view kTable3Csv = R"csv(n,l,HCl:EQR,NO:EQR,NO:AIM,CO:EQR,CO:AIM
0,0,-4.541848211101,-8.002659419493,-8.002659417,-10.794315323,-10.79431532
1,0,-4.393727956046,-7.921456840689,-7.921456839,-10.693839925,-10.69383992
1,1,-4.391293850595,-7.921043829925,-7.921043834,-10.693371229,-10.69337123
2,0,-4.252737112329,-7.841483958093,-7.841483956,-10.594760890,-10.59476089
2,1,-4.250419208735,-7.841077185904,-7.841077188,-10.594298692,-10.59429869
2,2,-4.245791052967,-7.840263768523,-7.840263771,-10.593374417,-10.59337441
3,0,-4.118425371585,-7.762716067159,-7.762716066,-10.497052462,-10.49705246
3,1,-4.116216389518,-7.762315408528,-7.762315413,-10.496596643,-10.49659664
3,2,-4.111805631214,-7.761514215884,-7.761514218,-10.495685124,-10.49568512
3,3,-4.105207449232,-7.760312738370,-7.760312744,-10.494318144,-10.49431814
4,0,-3.990377425087,-7.685129080626,-7.685129079,-10.400689478,-10.40068947
4,1,-3.988270645562,-7.684734413653,-7.684734417,-10.400239921,-10.40023992
4,2,-3.984063879462,-7.683945202003,-7.683945203,-10.399340924,-10.39934092
4,3,-3.977770657506,-7.682761690175,-7.682761696,-10.397992722,-10.39799272
4,4,-3.969411138650,-7.681184244677,-7.681184246,-10.396195666,-10.39619567
5,0,-3.868209749404,-7.608699510108,-7.608699509,-10.305647347,-10.30564735
5,1,-3.866198963636,-7.608310715917,-7.608310719,-10.305203938,-10.30520394
5,2,-3.862183802008,-7.607533247563,-7.607533248,-10.304317236,-10.30431723
5,3,-3.856177032746,-7.606367345012,-7.606367349,-10.302987469,-10.30298747
5,4,-3.848197679994,-7.604813367976,-7.604813368,-10.301214985,-10.30121499
5,5,-3.838270872139,-7.602871795644,-7.602871795,-10.299000242,-10.29900024
)csv";

inline constexpr std::string_view kTable4Csv = R"csv(D,l,n,I2:EQR,LiH:EQR,HCl:EQR
2,0,0,-1.579083735645,-2.467536868725,-4.542168190064
2,0,1,-1.573688303518,-2.376033294347,-4.394032410177
2,0,2,-1.568320476987,-2.289526762193,-4.253027029918
2,1,0,-1.579079099175,-2.466630860376,-4.540888545222
2,1,1,-1.573683690790,-2.375177207655,-4.392814848343
2,1,2,-1.568315887840,-2.288716995880,-4.251867599163
2,2,0,-1.579065189928,-2.463916832438,-4.537053942242
2,2,1,-1.573669852770,-2.372612671616,-4.389166233568
2,2,2,-1.568302120561,-2.286291171344,-4.248393136578
2,3,0,-1.579042008394,-2.459406732177,-4.530677339114
2,3,1,-1.573646789943,-2.368350817764,-4.383098743943
2,3,2,-1.568279175633,-2.282259674365,-4.242615099462
3,0,0,-1.579082576525,-2.467310304097,-4.541848211101
3,0,1,-1.573687150333,-2.375819214406,-4.393727956046
3,0,2,-1.568319329698,-2.289324266254,-4.252737112328
3,1,0,-1.579073303626,-2.465499287366,-4.539290004878
3,1,1,-1.573677924919,-2.374107972668,-4.391293850595
3,1,2,-1.568310151445,-2.287705602815,-4.250419208735
3,2,0,-1.579054758153,-2.461885237093,-4.534182246350
3,2,1,-1.573659474414,-2.370692927106,-4.386433772612
4,0,0,-1.579079099175,-2.466630860376,-4.540888545222
4,0,1,-1.573683690790,-2.375177207655,-4.392814848343
4,0,2,-1.568315887840,-2.288716995880,-4.251867599163
4,1,0,-1.579065189928,-2.463916832438,-4.537053942242
4,1,1,-1.573669852770,-2.372612671616,-4.389166233568
4,1,2,-1.568302120561,-2.286291171344,-4.248393136578
4,2,0,-1.579042008394,-2.459406732177,-4.530677339114
4,2,1,-1.573646789943,-2.368350817764,-4.383098743943
4,2,2,-1.568279175633,-2.282259674365,-4.242615099462
)csv";

inline constexpr std::string_view kTable5Csv = R"csv(D,l,n,O2:EQR,NO:EQR,CO:EQR
2,0,0,-5.126402999836,-8.002711844782,-10.794374740920
2,0,1,-5.066684753267,-7.921508470069,-10.693898515189
2,0,2,-5.008003961426,-7.841534807595,-10.594818667644
2,1,0,-5.126225485390,-8.002502147751,-10.794137074251
2,1,1,-5.066510331583,-7.921301956595,-10.693664159142
2,1,2,-5.007832561073,-7.841331413560,-10.594587561016
2,2,0,-5.125693015861,-8.001873122635,-10.793424137068
2,2,1,-5.065987138736,-7.920682480901,-10.692961152734
2,2,2,-5.007318430661,-7.840721294966,-10.593894301796
2,3,0,-5.124805812601,-8.000824967303,-10.792236117812
2,3,1,-5.065115391268,-7.919650237110,-10.691789681130
2,3,2,-5.006461782057,-7.839704642277,-10.592739071948
3,0,0,-5.126358620071,-8.002659419493,-10.794315323271
3,0,1,-5.066641146718,-7.921456840689,-10.693839925213
3,0,2,-5.007961110233,-7.841483958093,-10.594760890040
3,1,0,-5.126003609633,-8.002240041928,-10.793840005639
3,1,1,-5.066292321402,-7.921043829925,-10.693371228552
3,1,2,-5.007618327191,-7.841077185904,-10.594298691949
3,2,0,-5.125293736355,-8.001401418731,-10.792889496018
3,2,1,-5.065594815162,-7.920217937834,-10.692433958691
4,0,0,-5.126225485390,-8.002502147751,-10.794137074251
4,0,1,-5.066510331583,-7.921301956595,-10.693664159142
4,0,2,-5.007832561073,-7.841331413560,-10.594587561016
4,1,0,-5.125693015861,-8.001873122635,-10.793424137068
4,1,1,-5.065987138736,-7.920682480901,-10.692961152734
4,1,2,-5.007318430661,-7.840721294966,-10.593894301796
4,2,0,-5.124805812601,-8.000824967303,-10.792236117812
4,2,1,-5.065115391268,-7.919650237110,-10.691789681130
4,2,2,-5.006461782057,-7.839704642277,-10.592739071948
)csv";

inline constexpr std::string_view kTable7Csv = R"csv(n,l,N2:EQR,N2:NU,CO:EQR,CO:NU
0,0,0.054436738370,0.054430,0.050829386733,0.050823
1,0,0.162076974947,0.162057,0.151304784801,0.151287
1,1,0.162565552668,0.162546,0.151773481462,0.151755
2,0,0.268261347644,0.268229,0.250383819984,0.250354
2,1,0.268743332192,0.268711,0.250846018075,0.250816
2,2,0.269707181517,0.269675,0.251770292931,0.251744
3,0,0.373015993195,0.372972,0.348092247640,0.348051
3,1,0.373491502668,0.373447,0.348548066746,0.348507
3,2,0.374442403850,0.374398,0.349459585720,0.349418
3,3,0.375868461286,0.375823,0.350826566166,0.350785
4,0,0.476366464424,0.476313,0.444455232045,0.444403
4,1,0.476835614288,0.476779,0.444904789014,0.444852
4,2,0.477773798215,0.477717,0.445803785755,0.445751
4,3,0.479180784677,0.479124,0.447151987956,0.447099
4,4,0.481056226559,0.480999,0.448949044337,0.448895
5,0,0.578337745829,0.578269,0.539497362596,0.539434
5,1,0.578800648986,0.578732,0.539940771611,0.539877
5,2,0.579726341424,0.579658,0.540827474443,0.540764
5,3,0.581114595455,0.581046,0.542157240772,0.542093
5,4,0.582965069724,0.582896,0543929725307,0.543865
5,5,0.585277309425,0.585208,0.546144468004,0.546082
)csv";

inline constexpr std::string_view kTable8Csv = R"csv(n,l,NO:EQR,NO:NU,CH:EQR,CH:NU
0,0,0.041123148507,0.041118,0.083224106534,0.083214
1,0,0.122325727312,0.122311,0.241151342060,0.241123
1,1,0.122738738076,0.122724,0.244409651454,0.244381
2,0,0.202298609907,0.202274,0.389591252689,0.389547
2,1,0.202705382097,0.202681,0.392655829482,0.392611
2,2,0.203518799478,0.203494,0.398768962343,0.398722
3,0,0.281066500842,0.281033,0.529288818460,0.529229
3,1,0.281467159473,0.281434,0.532174721830,0.532115
3,2,0.282268352117,0.282235,0.537931662876,0.537870
3,3,0.283469829631,0.283436,0.546530102918,0.546467
4,0,0.358653487375,0.358611,0.660917306208,0.660844
4,1,0.359048154348,0.359006,0.663638151412,0.663565
4,2,0.359837365998,0.359795,0.669066052612,0.668992
4,3,0.361020877826,0.360978,0.677173530261,0.677098
4,4,0.362598323324,0.362555,0.687919851051,0.687842
5,0,0.435083057893,0.435032,0.785086396757,0.785001
5,1,0.435471852084,0.435421,0.787654550920,0.787569
5,2,0.436249320438,0.436198,0.792778001145,0.792692
5,3,0.437415222989,0.437364,0.800431194100,0.800343
5,4,0.438969200025,0.438917,0.810576203106,0.810487
5,5,0.440910772357,0.440858,0.823163201411,0.823071
)csv";

inline constexpr std::array<TableAsset, 6> kTables = {
    TableAsset{2, "kratzer", "3D Kratzer energies (eV), LiH/I2/O2 with AIM comparison", kTable2Csv},
    TableAsset{3, "kratzer", "3D Kratzer energies (eV), HCl/NO/CO with AIM comparison", kTable3Csv},
    TableAsset{4, "kratzer", "Kratzer energies (eV) in D = 2, 3, 4: I2/LiH/HCl", kTable4Csv},
    TableAsset{5, "kratzer", "Kratzer energies (eV) in D = 2, 3, 4: O2/NO/CO", kTable5Csv},
    TableAsset{7, "modified", "3D modified Kratzer energies (eV), N2/CO with NU comparison", kTable7Csv},
    TableAsset{8, "modified", "3D modified Kratzer energies (eV), NO/CH with NU comparison", kTable8Csv},
};

}  // namespace kratzer::reference
