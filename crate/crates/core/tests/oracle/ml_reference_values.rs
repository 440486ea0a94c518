// alpha, rho, Re z, Im z, Re E, Im E  (generated by ml_reference.py)
&[
    (0.3, 0.3, -1.05, 0.0, 0.07328327988640984, 0.0),
    (0.3, 0.3, -1.0426320082177045, -0.026124928235797443, 0.07381690512996288, -0.0020493593159240583),
    (0.3, 0.3, -1.0353553390593273, -0.035355339059327376, 0.07435571928109345, -0.0028039576602033414),
    (0.3, 0.3, -1.7, 0.0, 0.040290237389144, 0.0),
    (0.3, 0.3, -1.5968481150478646, -0.3657489953011641, 0.040941486277935465, -0.012839881323781093),
    (0.3, 0.3, -1.4949747468305832, -0.4949747468305832, 0.04175119555305178, -0.018929569730986626),
    (0.3, 0.3, -4.0, 0.0, 0.010705694130905866, 0.0),
    (0.3, 0.3, -3.5579204930622765, -1.5674956941478464, 0.00877024572475019, -0.00746926348263333),
    (0.3, 0.3, -3.121320343559643, -2.1213203435596424, 0.006581366315040382, -0.010574141364178932),
    (0.3, 0.3, -16.0, 0.0, 0.0008383701900585593, 4.951551323037397e-60),
    (0.3, 0.3, -13.789602465311383, -7.8374784707392315, 0.00046781765167808306, -0.000722938257379345),
    (0.3, 0.3, -11.606601717798213, -10.606601717798211, 0.00012444604264413742, -0.0008759065457936794),
    (0.3, 0.3, -81.0, 0.0, 3.4718840679044426e-05, 5.048472567400388e-61),
    (0.3, 0.3, -69.21121314832737, -41.799885177275904, 1.64844590937964e-05, -3.078035138061822e-05),
    (0.3, 0.3, -57.568542494923804, -56.5685424949238, 9.734804466954794e-07, -3.510034367559315e-05),
    (0.3, 0.3, -601.0, 0.0, 6.386060502077877e-07, -8.75637593561709e-62),
    (0.3, 0.3, -512.5840986124554, -313.4991388295693, 2.917144693751081e-07, -5.686418877948672e-07),
    (0.3, 0.3, -425.26406871192853, -424.2640687119285, 2.3863612829856517e-09, -6.395873333767023e-07),
    (0.3, 0.3, -5001.0, 0.0, 9.23873896917922e-09, 3.8411240358629125e-62),
    (0.3, 0.3, -4264.200821770461, -2612.492823579744, 4.197418167392715e-09, -8.231155659935354e-09),
    (0.3, 0.3, -3536.533905932738, -3535.5339059327375, 4.14235683081773e-12, -9.240453291709345e-09),
    (0.3, 1.0, -1.05, 0.0, 0.44404875650914055, 0.0),
    (0.3, 1.0, -1.0426320082177045, -0.026124928235797443, 0.44576639051254113, -0.006430601333421459),
    (0.3, 1.0, -1.0353553390593273, -0.035355339059327376, 0.44748878350786514, -0.008768931733203015),
    (0.3, 1.0, -1.7, 0.0, 0.3261784179323462, 0.0),
    (0.3, 1.0, -1.5968481150478646, -0.3657489953011641, 0.3326315148218222, -0.05225818992569836),
    (0.3, 1.0, -1.4949747468305832, -0.4949747468305832, 0.3398845072189166, -0.0754773909717933),
    (0.3, 1.0, -4.0, 0.0, 0.16650174431551665, 0.0),
    (0.3, 1.0, -3.5579204930622765, -1.5674956941478464, 0.16181863377939537, -0.06007814554318354),
    (0.3, 1.0, -3.121320343559643, -2.1213203435596424, 0.1564418916783426, -0.08771510936256867),
    (0.3, 1.0, -16.0, 0.0, 0.04641594241768556, -5.517855469403995e-60),
    (0.3, 1.0, -13.789602465311383, -7.8374784707392315, 0.04130893213120844, -0.02248879023069206),
    (0.3, 1.0, -11.606601717798213, -10.606601717798211, 0.03598655323166284, -0.03125895935557586),
    (0.3, 1.0, -81.0, 0.0, 0.009442392478339147, -2.598610966491424e-61),
    (0.3, 1.0, -69.21121314832737, -41.799885177275904, 0.008123877536242306, -0.004864950921720153),
    (0.3, 1.0, -57.568542494923804, -56.5685424949238, 0.006806890159270663, -0.006620929893307532),
    (0.3, 1.0, -601.0, 0.0, 0.0012805879404456757, 1.4715760443520138e-61),
    (0.3, 1.0, -512.5840986124554, -313.4991388295693, 0.0010932253929351631, -0.0006678591907061456),
    (0.3, 1.0, -425.26406871192853, -424.2640687119285, 0.0009078994887692856, -0.0009045188640275227),
    (0.3, 1.0, -5001.0, 0.0, 0.0001540278026915275, 7.675631461726166e-63),
    (0.3, 1.0, -4264.200821770461, -2612.492823579744, 0.0001313497511261838, -8.046131159089103e-05),
    (0.3, 1.0, -3536.533905932738, -3535.5339059327375, 0.00010894862463540025, -0.00010889979644255523),
    (0.3, 1.3, -1.05, 0.0, 0.5294773747531994, 0.0),
    (0.3, 1.3, -1.0426320082177045, -0.026124928235797443, 0.5313925553211458, -0.007147287806863975),
    (0.3, 1.3, -1.0353553390593273, -0.035355339059327376, 0.5333113787530087, -0.009742039767690811),
    (0.3, 1.3, -1.7, 0.0, 0.3963656365103846, 0.0),
    (0.3, 1.3, -1.5968481150478646, -0.3657489953011641, 0.40421843422346204, -0.05985810132661082),
    (0.3, 1.3, -1.4949747468305832, -0.4949747468305832, 0.4129984892051112, -0.08625325072366102),
    (0.3, 1.3, -4.0, 0.0, 0.20837456392112083, 0.0),
    (0.3, 1.3, -3.5579204930622765, -1.5674956941478464, 0.20351860654359, -0.0727774536833449),
    (0.3, 1.3, -3.121320343559643, -2.1213203435596424, 0.19793288283660562, -0.10641776719377696),
    (0.3, 1.3, -16.0, 0.0, 0.059599003598894654, -3.6908381124583855e-61),
    (0.3, 1.3, -13.789602465311383, -7.8374784707392315, 0.053248535092221744, -0.028633563450886787),
    (0.3, 1.3, -11.606601717798213, -10.606601717798211, 0.04660135987534618, -0.03989308116259197),
    (0.3, 1.3, -81.0, 0.0, 0.012229106265699518, -2.1159392632624827e-61),
    (0.3, 1.3, -69.21121314832737, -41.799885177275904, 0.010532026176179092, -0.006290491296454781),
    (0.3, 1.3, -57.568542494923804, -56.5685424949238, 0.008834818081456867, -0.008566342499047823),
    (0.3, 1.3, -601.0, 0.0, 0.001661762748851172, 1.4403046944687533e-61),
    (0.3, 1.3, -512.5840986124554, -313.4991388295693, 0.0014188332722953716, -0.0008664629882567343),
    (0.3, 1.3, -425.26406871192853, -424.2640687119285, 0.0011785015453113683, -0.0011736033642455468),
    (0.3, 1.3, -5001.0, 0.0, 0.00019992920859774216, -3.8760618910200127e-63),
    (0.3, 1.3, -4264.200821770461, -2612.492823579744, 0.0001704958815117063, -0.00010443663987728026),
    (0.3, 1.3, -3536.533905932738, -3535.5339059327375, 0.00014142133932194608, -0.00014135055783294506),
    (0.3, 2.3, -1.05, 0.0, 0.4571203926805771, 0.0),
    (0.3, 2.3, -1.0426320082177045, -0.026124928235797443, 0.4585777690437695, -0.005407078268795546),
    (0.3, 2.3, -1.0353553390593273, -0.035355339059327376, 0.46003559888142537, -0.0073642436749897155),
    (0.3, 2.3, -1.7, 0.0, 0.3534181776907726, 0.0),
    (0.3, 2.3, -1.5968481150478646, -0.3657489953011641, 0.36036347207268465, -0.047834456902592574),
    (0.3, 2.3, -1.4949747468305832, -0.4949747468305832, 0.3680576489286885, -0.06862509504772282),
    (0.3, 2.3, -4.0, 0.0, 0.1954350766099426, 0.0),
    (0.3, 2.3, -3.5579204930622765, -1.5674956941478464, 0.19243366531246733, -0.06431184947684977),
    (0.3, 2.3, -3.121320343559643, -2.1213203435596424, 0.18897034275310245, -0.09425198995270313),
    (0.3, 2.3, -16.0, 0.0, 0.05846089522111908, 1.1274243479811643e-60),
    (0.3, 2.3, -13.789602465311383, -7.8374784707392315, 0.05258676962093465, -0.027662836945664297),
    (0.3, 2.3, -11.606601717798213, -10.606601717798211, 0.04639034357031602, -0.03869810508477341),
    (0.3, 2.3, -81.0, 0.0, 0.01218003479880085, 3.0303131768941856e-61),
    (0.3, 2.3, -69.21121314832737, -41.799885177275904, 0.010508454942176363, -0.006247051224800613),
    (0.3, 2.3, -57.568542494923804, -56.5685424949238, 0.008833066804147348, -0.008516598115893085),
    (0.3, 2.3, -601.0, 0.0, 0.0016608517833476683, 1.1694961256069087e-62),
    (0.3, 2.3, -512.5840986124554, -313.4991388295693, 0.001418416439613885, -0.0008656519698471233),
    (0.3, 2.3, -425.26406871192853, -424.2640687119285, 0.0011784972003794007, -0.0011726906167505834),
    (0.3, 2.3, -5001.0, 0.0, 0.0001999160127150527, -1.006813700909226e-63),
    (0.3, 2.3, -4264.200821770461, -2612.492823579744, 0.00017048988501970768, -0.00010442488339268329),
    (0.3, 2.3, -3536.533905932738, -3535.5339059327375, 0.00014142133176753621, -0.00014133735882482842),
    (0.5, 0.5, -1.05, 0.0, 0.12917539133824307, 0.0),
    (0.5, 0.5, -1.0426320082177045, -0.026124928235797443, 0.13016030864813302, -0.0037773829339166837),
    (0.5, 0.5, -1.0353553390593273, -0.035355339059327376, 0.1311545346815235, -0.005167395194769342),
    (0.5, 0.5, -1.7, 0.0, 0.06836197851967239, 0.0),
    (0.5, 0.5, -1.5968481150478646, -0.3657489953011641, 0.06940044786294579, -0.02355131329643904),
    (0.5, 0.5, -1.4949747468305832, -0.4949747468305832, 0.07074141026045852, -0.034827349343897834),
    (0.5, 0.5, -4.0, 0.0, 0.016191753047510728, 0.0),
    (0.5, 0.5, -3.5579204930622765, -1.5674956941478464, 0.012574829747113951, -0.012112660617698676),
    (0.5, 0.5, -3.121320343559643, -2.1213203435596424, 0.008493880187273184, -0.016908354056971997),
    (0.5, 0.5, -16.0, 0.0, 0.001095538348862886, 0.0),
    (0.5, 0.5, -13.789602465311383, -7.8374784707392315, 0.0005768593991350963, -0.0009575186952505003),
    (0.5, 0.5, -11.606601717798213, -10.606601717798211, 0.00010932521080319225, -0.0011351770133723657),
    (0.5, 0.5, -81.0, 0.0, 4.298587452894911e-05, 1.0961379032085629e-60),
    (0.5, 0.5, -69.21121314832737, -41.799885177275904, 2.0090912564701278e-05, -3.818306054373591e-05),
    (0.5, 0.5, -57.568542494923804, -56.5685424949238, 7.687317916790099e-07, -4.32980120370894e-05),
    (0.5, 0.5, -601.0, 0.0, 7.809879272073737e-07, 1.1471520835578815e-61),
    (0.5, 0.5, -512.5840986124554, -313.4991388295693, 3.559484404241566e-07, -6.95588429261182e-07),
    (0.5, 0.5, -425.26406871192853, -424.2640687119285, 1.843684885423153e-09, -7.817496837218176e-07),
    (0.5, 0.5, -5001.0, 0.0, 1.1279278831494671e-08, 2.6720042767429493e-62),
    (0.5, 0.5, -4264.200821770461, -2612.492823579744, 5.123087947976743e-09, -1.0049432941196442e-08),
    (0.5, 0.5, -3536.533905932738, -3535.5339059327375, 3.1908610880511287e-12, -1.1280600132584365e-08),
    (0.5, 1.0, -1.05, 0.0, 0.4142992306757269, 0.0),
    (0.5, 1.0, -1.0426320082177045, -0.026124928235797443, 0.41611185103843074, -0.006803463980213822),
    (0.5, 1.0, -1.0353553390593273, -0.035355339059327376, 0.4179308443323614, -0.009280573680802423),
    (0.5, 1.0, -1.7, 0.0, 0.2916632970753435, 0.0),
    (0.5, 1.0, -1.5968481150478646, -0.3657489953011641, 0.2976182471337885, -0.05341914536028418),
    (0.5, 1.0, -1.4949747468305832, -0.4949747468305832, 0.3044139480614816, -0.0774928591771463),
    (0.5, 1.0, -4.0, 0.0, 0.13699945762506138, 0.0),
    (0.5, 1.0, -3.5579204930622765, -1.5674956941478464, 0.13109346559048254, -0.054350787940138715),
    (0.5, 1.0, -3.121320343559643, -2.1213203435596424, 0.12430084968484868, -0.07906063458383097),
    (0.5, 1.0, -16.0, 0.0, 0.03519337782493084, 0.0),
    (0.5, 1.0, -13.789602465311383, -7.8374784707392315, 0.0309226668583573, -0.017505814085084677),
    (0.5, 1.0, -11.606601717798213, -10.606601717798211, 0.026532139767197125, -0.024148382880102178),
    (0.5, 1.0, -81.0, 0.0, 0.006964772810780584, -4.7111017561939975e-61),
    (0.5, 1.0, -69.21121314832737, -41.799885177275904, 0.0059730653012466765, -0.0036068615088850117),
    (0.5, 1.0, -57.568542494923804, -56.5685424949238, 0.004986382178105183, -0.004899013626250916),
    (0.5, 1.0, -601.0, 0.0, 0.0009387500874539585, 1.4730618848970869e-61),
    (0.5, 1.0, -512.5840986124554, -313.4991388295693, 0.000801039570803031, -0.0004899186703343173),
    (0.5, 1.0, -425.26406871192853, -424.2640687119285, 0.0006649028750213093, -0.0006633375308653327),
    (0.5, 1.0, -5001.0, 0.0, 0.0001128153513834188, 1.9747436302762204e-62),
    (0.5, 1.0, -4264.200821770461, -2612.492823579744, 9.619989420283755e-05, -5.893754391245208e-05),
    (0.5, 1.0, -3536.533905932738, -3535.5339059327375, 7.978845448406623e-05, -7.97658900927139e-05),
    (0.5, 1.5, -1.05, 0.0, 0.5578102564993077, 0.0),
    (0.5, 1.5, -1.0426320082177045, -0.026124928235797443, 0.5598256645132522, -0.007502111260830642),
    (0.5, 1.5, -1.0353553390593273, -0.035355339059327376, 0.5618435766110863, -0.010222187561425473),
    (0.5, 1.5, -1.7, 0.0, 0.4166686487792097, 0.0),
    (0.5, 1.5, -1.5968481150478646, -0.3657489953011641, 0.4252101873739602, -0.06393911387151625),
    (0.5, 1.5, -1.4949747468305832, -0.4949747468305832, 0.4347832861129134, -0.09211786893706528),
    (0.5, 1.5, -4.0, 0.0, 0.21575013559373465, 0.0),
    (0.5, 1.5, -3.5579204930622765, -1.5674956941478464, 0.21015668227239706, -0.07731170698013291),
    (0.5, 1.5, -3.121320343559643, -2.1213203435596424, 0.20368768467617343, -0.11310155824944779),
    (0.5, 1.5, -16.0, 0.0, 0.060300413885941824, 0.0),
    (0.5, 1.5, -13.789602465311383, -7.8374784707392315, 0.05366259356330725, -0.0292302558152291),
    (0.5, 1.5, -11.606601717798213, -10.606601717798211, 0.04674016540199794, -0.040632559575100674),
    (0.5, 1.5, -81.0, 0.0, 0.01225969416282987, -6.478372834443636e-61),
    (0.5, 1.5, -69.21121314832737, -41.799885177275904, 0.010546752520105071, -0.006317562760929861),
    (0.5, 1.5, -57.568542494923804, -56.5685424949238, 0.008835953718833525, -0.008597369124716075),
    (0.5, 1.5, -601.0, 0.0, 0.0016623315306365158, -1.7390406213696075e-61),
    (0.5, 1.5, -512.5840986124554, -313.4991388295693, 0.0014190936028068571, -0.0008669693518217303),
    (0.5, 1.5, -425.26406871192853, -424.2640687119285, 0.001178504353005052, -0.001174173298445354),
    (0.5, 1.5, -5001.0, 0.0, 0.00019993744943983536, 2.2498686166046567e-62),
    (0.5, 1.5, -4264.200821770461, -2612.492823579744, 0.00017049962644873027, -0.00010444398178965419),
    (0.5, 1.5, -3536.533905932738, -3535.5339059327375, 0.00014142134420123506, -0.00014135880069389783),
    (0.5, 2.5, -1.05, 0.0, 0.434858130978499, 0.0),
    (0.5, 2.5, -1.0426320082177045, -0.026124928235797443, 0.43613895089232085, -0.004728361561601549),
    (0.5, 2.5, -1.0353553390593273, -0.035355339059327376, 0.43741844686818115, -0.0064354916409667005),
    (0.5, 2.5, -1.7, 0.0, 0.34196867878328624, 0.0),
    (0.5, 2.5, -1.5968481150478646, -0.3657489953011641, 0.3487541078328447, -0.04369209267009365),
    (0.5, 2.5, -1.4949747468305832, -0.4949747468305832, 0.356237080732466, -0.06249204301714883),
    (0.5, 2.5, -4.0, 0.0, 0.19296068553113888, 0.0),
    (0.5, 2.5, -3.5579204930622765, -1.5674956941478464, 0.19060526960742213, -0.062326208612850854),
    (0.5, 2.5, -3.121320343559643, -2.1213203435596424, 0.18787146667484278, -0.09149884034689305),
    (0.5, 2.5, -16.0, 0.0, 0.05832781737027511, 0.0),
    (0.5, 2.5, -13.789602465311383, -7.8374784707392315, 0.052526526088690476, -0.027542266873053632),
    (0.5, 2.5, -11.606601717798213, -10.606601717798211, 0.04639292439379093, -0.03856181194221249),
    (0.5, 2.5, -81.0, 0.0, 0.012175564780836354, -2.4022029312506676e-62),
    (0.5, 2.5, -69.21121314832737, -41.799885177275904, 0.01050648128312046, -0.00624305256404569),
    (0.5, 2.5, -57.568542494923804, -56.5685424949238, 0.008833146997322303, -0.008512151503728459),
    (0.5, 2.5, -601.0, 0.0, 0.0016607741483673497, 8.255984332809647e-63),
    (0.5, 2.5, -512.5840986124554, -313.4991388295693, 0.001418381363820821, -0.0008655827610911994),
    (0.5, 2.5, -425.26406871192853, -424.2640687119285, 0.0011784974280847427, -0.001172613072604806),
    (0.5, 2.5, -5001.0, 0.0, 0.00019991489887466834, -2.217494189120533e-64),
    (0.5, 2.5, -4264.200821770461, -2612.492823579744, 0.00017048937964957094, -0.00010442389089303785),
    (0.5, 2.5, -3536.533905932738, -3535.5339059327375, 0.00014142133217016385, -0.00014133624515048402),
    (0.7, 0.7, -1.05, 0.0, 0.19881359268086576, 0.0),
    (0.7, 0.7, -1.0426320082177045, -0.026124928235797443, 0.20036250640706785, -0.005900745579079131),
    (0.7, 0.7, -1.0353553390593273, -0.035355339059327376, 0.20192343454182263, -0.008065161354012975),
    (0.7, 0.7, -1.7, 0.0, 0.10159741976614331, 0.0),
    (0.7, 0.7, -1.5968481150478646, -0.3657489953011641, 0.10334645486155433, -0.03830925919811939),
    (0.7, 0.7, -1.4949747468305832, -0.4949747468305832, 0.10570151042196088, -0.056803985589530044),
    (0.7, 0.7, -4.0, 0.0, 0.019722733789771928, 0.0),
    (0.7, 0.7, -3.5579204930622765, -1.5674956941478464, 0.013459950363074787, -0.01668422105763185),
    (0.7, 0.7, -3.121320343559643, -2.1213203435596424, 0.006351270441312458, -0.022590995013031245),
    (0.7, 0.7, -16.0, 0.0, 0.0010080559261712095, 0.0),
    (0.7, 0.7, -13.789602465311383, -7.8374784707392315, 0.0004771851656344641, -0.0008958680716478286),
    (0.7, 0.7, -11.606601717798213, -10.606601717798211, 2.3818442418282593e-05, -0.0010210558674012184),
    (0.7, 0.7, -81.0, 0.0, 3.6376259245667805e-05, -7.309797761665417e-61),
    (0.7, 0.7, -69.21121314832737, -41.799885177275904, 1.6615604301041616e-05, -3.239295071287073e-05),
    (0.7, 0.7, -57.568542494923804, -56.5685424949238, 1.3219212774390233e-07, -3.643419832492851e-05),
    (0.7, 0.7, -601.0, 0.0, 6.495475270865381e-07, 2.3879886565346638e-61),
    (0.7, 0.7, -512.5840986124554, -313.4991388295693, 2.951167357844667e-07, -5.787061397253841e-07),
    (0.7, 0.7, -425.26406871192853, -424.2640687119285, 3.0259978608841913e-10, -6.496738248459046e-07),
    (0.7, 0.7, -5001.0, 0.0, 9.35890122312483e-09, -2.7280141541012634e-62),
    (0.7, 0.7, -4264.200821770461, -2612.492823579744, 4.249244216867824e-09, -8.338764177924879e-09),
    (0.7, 0.7, -3536.533905932738, -3535.5339059327375, 5.204219940282093e-13, -9.359116985979658e-09),
    (0.7, 1.0, -1.05, 0.0, 0.38500225381566344, 0.0),
    (0.7, 1.0, -1.0426320082177045, -0.026124928235797443, 0.3869934818339871, -0.0074804614155235954),
    (0.7, 1.0, -1.0353553390593273, -0.035355339059327376, 0.38899238894283494, -0.010205359869367794),
    (0.7, 1.0, -1.7, 0.0, 0.2518293171550159, 0.0),
    (0.7, 1.0, -1.5968481150478646, -0.3657489953011641, 0.2573505683362871, -0.057051927177019124),
    (0.7, 1.0, -1.4949747468305832, -0.4949747468305832, 0.263856910164729, -0.08328388548560975),
    (0.7, 1.0, -4.0, 0.0, 0.09976025489051463, 0.0),
    (0.7, 1.0, -3.5579204930622765, -1.5674956941478464, 0.09171245441409068, -0.04686595160686845),
    (0.7, 1.0, -3.121320343559643, -2.1213203435596424, 0.08238676267870607, -0.06740969767093234),
    (0.7, 1.0, -16.0, 0.0, 0.02196053540328933, 0.0),
    (0.7, 1.0, -13.789602465311383, -7.8374784707392315, 0.018872373445894305, -0.011351818365475047),
    (0.7, 1.0, -11.606601717798213, -10.606601717798211, 0.015781636764511345, -0.015444813098363694),
    (0.7, 1.0, -81.0, 0.0, 0.004167949386640787, 2.7364445656801686e-61),
    (0.7, 1.0, -69.21121314832737, -41.799885177275904, 0.0035580387271043064, -0.0021738725745542712),
    (0.7, 1.0, -57.568542494923804, -56.5685424949238, 0.0029547233960826483, -0.002944182450143582),
    (0.7, 1.0, -601.0, 0.0, 0.00055693837137977, 1.140131897767726e-61),
    (0.7, 1.0, -512.5840986124554, -313.4991388295693, 0.00047494117841815985, -0.0002909320569435032),
    (0.7, 1.0, -425.26406871192853, -424.2640687119285, 0.00039394454535378624, -0.00039376147070188503),
    (0.7, 1.0, -5001.0, 0.0, 6.685192288208862e-05, 2.0660340800816514e-62),
    (0.7, 1.0, -4264.200821770461, -2612.492823579744, 5.700168244388052e-05, -3.492906536684175e-05),
    (0.7, 1.0, -3536.533905932738, -3535.5339059327375, 4.727330658670825e-05, -4.727067862460256e-05),
    (0.7, 1.7, -1.05, 0.0, 0.5857121392231777, 0.0),
    (0.7, 1.7, -1.0426320082177045, -0.026124928235797443, 0.5877521539080875, -0.0075525414179653146),
    (0.7, 1.7, -1.0353553390593273, -0.035355339059327376, 0.5897917521487269, -0.01028335596542004),
    (0.7, 1.7, -1.7, 0.0, 0.44010040167352005, 0.0),
    (0.7, 1.7, -1.5968481150478646, -0.3657489953011641, 0.4496652849922257, -0.06726544498408943),
    (0.7, 1.7, -1.4949747468305832, -0.4949747468305832, 0.4603879040315929, -0.09672170119451327),
    (0.7, 1.7, -4.0, 0.0, 0.22505993627737134, 0.0),
    (0.7, 1.7, -3.5579204930622765, -1.5674956941478464, 0.21864989532591117, -0.08315723142754215),
    (0.7, 1.7, -3.121320343559643, -2.1213203435596424, 0.21113798306466716, -0.12189764561890025),
    (0.7, 1.7, -16.0, 0.0, 0.061127466537294416, 0.0),
    (0.7, 1.7, -13.789602465311383, -7.8374784707392315, 0.05413138011034832, -0.029942973981988395),
    (0.7, 1.7, -11.606601717798213, -10.606601717798211, 0.046871475170121475, -0.04150243694656238),
    (0.7, 1.7, -81.0, 0.0, 0.012294222847078509, -4.563487229649359e-61),
    (0.7, 1.7, -69.21121314832737, -41.799885177275904, 0.010563157784913279, -0.006348175244416836),
    (0.7, 1.7, -57.568542494923804, -56.5685424949238, 0.008836932771682552, -0.008632287757039963),
    (0.7, 1.7, -601.0, 0.0, 0.001662966824673245, 1.458992452737939e-61),
    (0.7, 1.7, -512.5840986124554, -313.4991388295693, 0.001419383806975476, -0.0008675350450828409),
    (0.7, 1.7, -425.26406871192853, -424.2640687119285, 0.0011785067290802486, -0.0011748095716774508),
    (0.7, 1.7, -5001.0, 0.0, 0.00019994664028736612, -2.334116671463678e-62),
    (0.7, 1.7, -4264.200821770461, -2612.492823579744, 0.00017050380210718516, -0.00010445217027742768),
    (0.7, 1.7, -3536.533905932738, -3535.5339059327375, 0.00014142134832011266, -0.00014136799324648302),
    (0.7, 2.7, -1.05, 0.0, 0.4095497569268626, 0.0),
    (0.7, 2.7, -1.0426320082177045, -0.026124928235797443, 0.41062602578629526, -0.003947479507119043),
    (0.7, 2.7, -1.0353553390593273, -0.035355339059327376, 0.4116992740744118, -0.00536789134067954),
    (0.7, 2.7, -1.7, 0.0, 0.3294187031660489, 0.0),
    (0.7, 2.7, -1.5968481150478646, -0.3657489953011641, 0.3359910691538731, -0.038701938447095144),
    (0.7, 2.7, -1.4949747468305832, -0.4949747468305832, 0.34318425371392425, -0.05509044497494125),
    (0.7, 2.7, -4.0, 0.0, 0.1909412779676428, 0.0),
    (0.7, 2.7, -3.5579204930622765, -1.5674956941478464, 0.1894410161530201, -0.0602734518580362),
    (0.7, 2.7, -3.121320343559643, -2.1213203435596424, 0.18768564478756136, -0.08872463726296172),
    (0.7, 2.7, -16.0, 0.0, 0.058312666820482424, 0.0),
    (0.7, 2.7, -13.789602465311383, -7.8374784707392315, 0.05254884897699398, -0.02751728488559485),
    (0.7, 2.7, -11.606601717798213, -10.606601717798211, 0.04643881411599884, -0.03855357724386871),
    (0.7, 2.7, -81.0, 0.0, 0.012177116537293758, 2.251780260500994e-61),
    (0.7, 2.7, -69.21121314832737, -41.799885177275904, 0.010507515888205322, -0.006244358725516586),
    (0.7, 2.7, -57.568542494923804, -56.5685424949238, 0.008833599607102904, -0.008513868640242719),
    (0.7, 2.7, -601.0, 0.0, 0.001660811778102738, 3.728337653213424e-62),
    (0.7, 2.7, -512.5840986124554, -313.4991388295693, 0.0014183993133483196, -0.0008656161134624456),
    (0.7, 2.7, -425.26406871192853, -424.2640687119285, 0.001178498583054052, -0.0011726511732124867),
    (0.7, 2.7, -5001.0, 0.0, 0.000199915461489559, 5.706332927250312e-63),
    (0.7, 2.7, -4264.200821770461, -2612.492823579744, 0.00017048963658826798, -0.0001044243918840707),
    (0.7, 2.7, -3536.533905932738, -3535.5339059327375, 0.00014142133418565438, -0.0001413368085986405),
    (0.9, 0.9, -1.05, 0.0, 0.29211137558891154, 0.0),
    (0.9, 0.9, -1.0426320082177045, -0.026124928235797443, 0.29429394804557735, -0.008208963198741677),
    (0.9, 0.9, -1.0353553390593273, -0.035355339059327376, 0.29648597173486063, -0.011201144297416572),
    (0.9, 0.9, -1.7, 0.0, 0.1488655730889803, 0.0),
    (0.9, 0.9, -1.5968481150478646, -0.3657489953011641, 0.15292876180910228, -0.05963555750278337),
    (0.9, 0.9, -1.4949747468305832, -0.4949747468305832, 0.15828657604307278, -0.0881839497047103),
    (0.9, 0.9, -4.0, 0.0, 0.01992384714278625, 0.0),
    (0.9, 0.9, -3.5579204930622765, -1.5674956941478464, 0.00772465169997448, -0.02242672958187751),
    (0.9, 0.9, -3.121320343559643, -2.1213203435596424, -0.0070328424955840236, -0.028861987500124326),
    (0.9, 0.9, -16.0, 0.0, 0.0004677327576717339, 0.0),
    (0.9, 0.9, -13.789602465311383, -7.8374784707392315, 0.00018114802314974276, -0.00041853703243106225),
    (0.9, 0.9, -11.606601717798213, -10.606601717798211, -3.539429693782447e-05, -0.00044489563849605003),
    (0.9, 0.9, -81.0, 0.0, 1.5035284561395248e-05, 0.0),
    (0.9, 0.9, -69.21121314832737, -41.799885177275904, 6.685285808370747e-06, -1.3421233970831625e-05),
    (0.9, 0.9, -57.568542494923804, -56.5685424949238, -1.8233938743652277e-07, -1.4953217028210343e-05),
    (0.9, 0.9, -601.0, 0.0, 2.6336370241599147e-07, -7.61769352880486e-62),
    (0.9, 0.9, -512.5840986124554, -313.4991388295693, 1.1925443860837577e-07, -2.347195328188383e-07),
    (0.9, 0.9, -425.26406871192853, -424.2640687119285, -4.106755919520568e-10, -2.6319168791855376e-07),
    (0.9, 0.9, -5001.0, 0.0, 3.7850895946976615e-09, -7.849315584613682e-64),
    (0.9, 0.9, -4264.200821770461, -2612.492823579744, 1.7178638583992785e-09, -3.372644924590654e-09),
    (0.9, 0.9, -3536.533905932738, -3535.5339059327375, -7.047372240725638e-13, -3.784797291741722e-09),
    (0.9, 1.0, -1.05, 0.0, 0.35939639604307455, 0.0),
    (0.9, 1.0, -1.0426320082177045, -0.026124928235797443, 0.36167808375220184, -0.00854505972455479),
    (0.9, 1.0, -1.0353553390593273, -0.035355339059327376, 0.36396688226666984, -0.011653028910594521),
    (0.9, 1.0, -1.7, 0.0, 0.20642354058778176, 0.0),
    (0.9, 1.0, -1.5968481150478646, -0.3657489953011641, 0.21210843051709877, -0.0654700949692138),
    (0.9, 1.0, -1.4949747468305832, -0.4949747468305832, 0.21919100482888798, -0.09618508481940287),
    (0.9, 1.0, -4.0, 0.0, 0.050411103314434616, 0.0),
    (0.9, 1.0, -3.5579204930622765, -1.5674956941478464, 0.037539443554341544, -0.03563642531327947),
    (0.9, 1.0, -3.121320343559643, -2.1213203435596424, 0.021931676259231352, -0.04904372063304006),
    (0.9, 1.0, -16.0, 0.0, 0.007369172571101862, 0.0),
    (0.9, 1.0, -13.789602465311383, -7.8374784707392315, 0.0061052928915331225, -0.003986878845735453),
    (0.9, 1.0, -11.606601717798213, -10.606601717798211, 0.004914970756616774, -0.005293531405959165),
    (0.9, 1.0, -81.0, 0.0, 0.0013250357233189093, 0.0),
    (0.9, 1.0, -69.21121314832737, -41.799885177275904, 0.0011251780274067363, -0.0006964560999059984),
    (0.9, 1.0, -57.568542494923804, -56.5685424949238, 0.0009288606750013058, -0.0009400997063259691),
    (0.9, 1.0, -601.0, 0.0, 0.00017538229124045178, 1.002595105100277e-61),
    (0.9, 1.0, -512.5840986124554, -313.4991388295693, 0.00014946074649329618, -9.17081156493042e-05),
    (0.9, 1.0, -425.26406871192853, -424.2640687119285, 0.00012387717607671275, -0.00012407026233027976),
    (0.9, 1.0, -5001.0, 0.0, 2.10255072060932e-05, 1.3792738348386718e-62),
    (0.9, 1.0, -4264.200821770461, -2612.492823579744, 1.7926088164606537e-05, -1.0986817160791371e-05),
    (0.9, 1.0, -3536.533905932738, -3535.5339059327375, 1.4865321225699275e-05, -1.4868088821121821e-05),
    (0.9, 1.9, -1.05, 0.0, 0.6100986704351671, 0.0),
    (0.9, 1.9, -1.0426320082177045, -0.026124928235797443, 0.6120427688723993, -0.007140116197085873),
    (0.9, 1.9, -1.0353553390593273, -0.035355339059327376, 0.6139822259382174, -0.009711178843185127),
    (0.9, 1.9, -1.7, 0.0, 0.4668096820071872, 0.0),
    (0.9, 1.9, -1.5968481150478646, -0.3657489953011641, 0.47773245521249, -0.068422331164688),
    (0.9, 1.9, -1.4949747468305832, -0.4949747468305832, 0.4898885727276542, -0.097859437259272),
    (0.9, 1.9, -4.0, 0.0, 0.23739722417139134, 0.0),
    (0.9, 1.9, -3.5579204930622765, -1.5674956941478464, 0.23023648396209984, -0.09141808327850078),
    (0.9, 1.9, -3.121320343559643, -2.1213203435596424, 0.22165145270013675, -0.13492687991102392),
    (0.9, 1.9, -16.0, 0.0, 0.06203942671430613, 0.0),
    (0.9, 1.9, -13.789602465311383, -7.8374784707392315, 0.05460173063314142, -0.030744396767281277),
    (0.9, 1.9, -11.606601717798213, -10.606601717798211, 0.046946125157504785, -0.04244526798728271),
    (0.9, 1.9, -81.0, 0.0, 0.012329320546625692, 0.0),
    (0.9, 1.9, -69.21121314832737, -41.799885177275904, 0.010579467791288075, -0.006379372109348651),
    (0.9, 1.9, -57.568542494923804, -56.5685424949238, 0.008837432903050368, -0.008667591316210844),
    (0.9, 1.9, -601.0, 0.0, 0.0016636016933590009, 1.230272344210646e-61),
    (0.9, 1.9, -512.5840986124554, -313.4991388295693, 0.001419672927674252, -0.0008681005386909393),
    (0.9, 1.9, -425.26406871192853, -424.2640687119285, 0.0011785079197674797, -0.0011754449330777196),
    (0.9, 1.9, -5001.0, 0.0, 0.0001999558037378112, -4.7274111898971063e-63),
    (0.9, 1.9, -4264.200821770461, -2612.492823579744, 0.00017050796377684072, -0.00010446033466315209),
    (0.9, 1.9, -3536.533905932738, -3535.5339059327375, 0.00014142135037889674, -0.00014137715754960196),
    (0.9, 2.9, -1.05, 0.0, 0.37971471638355436, 0.0),
    (0.9, 2.9, -1.0426320082177045, -0.026124928235797443, 0.3805635784090637, -0.0030902992871210348),
    (0.9, 2.9, -1.0353553390593273, -0.035355339059327376, 0.38140830605896753, -0.004197930336899594),
    (0.9, 2.9, -1.7, 0.0, 0.3144172415043677, 0.0),
    (0.9, 2.9, -1.5968481150478646, -0.3657489953011641, 0.32057872860296205, -0.03256689488353905),
    (0.9, 2.9, -1.4949747468305832, -0.4949747468305832, 0.327235307478473, -0.04602434816295939),
    (0.9, 2.9, -4.0, 0.0, 0.18934441539191485, 0.0),
    (0.9, 2.9, -3.5579204930622765, -1.5674956941478464, 0.1891296267276121, -0.05781360573826404),
    (0.9, 2.9, -3.121320343559643, -2.1213203435596424, 0.18891109969100425, -0.08543567392772254),
    (0.9, 2.9, -16.0, 0.0, 0.05845123640384307, 0.0),
    (0.9, 2.9, -13.789602465311383, -7.8374784707392315, 0.05267321170813459, -0.02762139389011734),
    (0.9, 2.9, -11.606601717798213, -10.606601717798211, 0.0465296161174474, -0.0387148917057599),
    (0.9, 2.9, -81.0, 0.0, 0.012185884574571782, 0.0),
    (0.9, 2.9, -69.21121314832737, -41.799885177275904, 0.010512057749292354, -0.006252048201011308),
    (0.9, 2.9, -57.568542494923804, -56.5685424949238, 0.008834359829406942, -0.008522928620355485),
    (0.9, 2.9, -601.0, 0.0, 0.0016609843994925678, 2.8080472352275255e-62),
    (0.9, 2.9, -512.5840986124554, -313.4991388295693, 0.0014184790977373443, -0.0008657696348596639),
    (0.9, 2.9, -425.26406871192853, -424.2640687119285, 0.001178500468390755, -0.0011728245679452117),
    (0.9, 2.9, -5001.0, 0.0, 0.000199917981073232, 4.335421024652312e-63),
    (0.9, 2.9, -4264.200821770461, -2612.492823579744, 0.00017049078292260408, -0.00010442663635800636),
    (0.9, 2.9, -3536.533905932738, -3535.5339059327375, 0.00014142133746330925, -0.0001413393295383792),
    (1.0, 1.0, -1.05, 0.0, 0.3499377491111553, 0.0),
    (1.0, 1.0, -1.0426320082177045, -0.026124928235797443, 0.3524053149154326, -0.00920865866370785),
    (1.0, 1.0, -1.0353553390593273, -0.035355339059327376, 0.3548782630473042, -0.012552071780618916),
    (1.0, 1.0, -1.7, 0.0, 0.18268352405273466, 0.0),
    (1.0, 1.0, -1.5968481150478646, -0.3657489953011641, 0.18913750531161172, -0.0724360077334757),
    (1.0, 1.0, -1.4949747468305832, -0.4949747468305832, 0.1973394288060252, -0.10652289172080226),
    (1.0, 1.0, -4.0, 0.0, 0.01831563888873418, 0.0),
    (1.0, 1.0, -3.5579204930622765, -1.5674956941478464, 9.406134083785229e-05, -0.02849786974871924),
    (1.0, 1.0, -3.121320343559643, -2.1213203435596424, -0.02306963151918366, -0.037583313564192054),
    (1.0, 1.0, -16.0, 0.0, 1.1253517471925912e-07, 0.0),
    (1.0, 1.0, -13.789602465311383, -7.8374784707392315, 1.6935546794781888e-08, -1.0261068763158528e-06),
    (1.0, 1.0, -11.606601717798213, -10.606601717798211, -3.4532553517291835e-06, 8.425566325547143e-06),
]
