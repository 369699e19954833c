// Generated by tools/gen_polygon_table.py. Do not edit by hand.
#include "windiso/polygon_table.hpp"

namespace windiso::detail {

const PolyVertex kRegularPolygonTable[2077] = {
    // n = 3
    {1048576, 0}, {-524288, 908093}, {-524288, -908093},
    // n = 4
    {1048576, 0}, {0, 1048576}, {-1048576, 0}, {0, -1048576},
    // n = 5
    {1048576, 0}, {324028, 997255}, {-848316, 616338}, {-848316, -616338}, {324028, -997255},
    // n = 6
    {1048576, 0}, {524288, 908093}, {-524288, 908093}, {-1048576, 0}, {-524288, -908093}, {524288, -908093},
    // n = 7
    {1048576, 0}, {653776, 819810}, {-233330, 1022286}, {-944734, 454960}, {-944734, -454960}, {-233330, -1022286},
    {653776, -819810},
    // n = 8
    {1048576, 0}, {741455, 741455}, {0, 1048576}, {-741455, 741455}, {-1048576, 0}, {-741455, -741455},
    {0, -1048576}, {741455, -741455},
    // n = 9
    {1048576, 0}, {803256, 674012}, {182083, 1032646}, {-524288, 908093}, {-985339, 358634}, {-985339, -358634},
    {-524288, -908093}, {182083, -1032646}, {803256, -674012},
    // n = 10
    {1048576, 0}, {848316, 616338}, {324028, 997255}, {-324028, 997255}, {-848316, 616338}, {-1048576, 0},
    {-848316, -616338}, {-324028, -997255}, {324028, -997255}, {848316, -616338},
    // n = 11
    {1048576, 0}, {882118, 566903}, {435594, 953818}, {-149228, 1037903}, {-686671, 792461}, {-1006101, 295418},
    {-1006101, -295418}, {-686671, -792461}, {-149228, -1037903}, {435594, -953818}, {882118, -566903},
    // n = 12
    {1048576, 0}, {908093, 524288}, {524288, 908093}, {0, 1048576}, {-524288, 908093}, {-908093, 524288},
    {-1048576, 0}, {-908093, -524288}, {-524288, -908093}, {0, -1048576}, {524288, -908093}, {908093, -524288},
    // n = 13
    {1048576, 0}, {928468, 487298}, {595659, 862961}, {126392, 1040931}, {-371830, 980436}, {-784870, 695335},
    {-1018106, 250941}, {-1018106, -250941}, {-784870, -695335}, {-371830, -980436}, {126392, -1040931}, {595659, -862961},
    {928468, -487298},
    // n = 14
    {1048576, 0}, {944734, 454960}, {653776, 819810}, {233330, 1022286}, {-233330, 1022286}, {-653776, 819810},
    {-944734, 454960}, {-1048576, 0}, {-944734, -454960}, {-653776, -819810}, {-233330, -1022286}, {233330, -1022286},
    {653776, -819810}, {944734, -454960},
    // n = 15
    {1048576, 0}, {957922, 426494}, {701634, 779244}, {324028, 997255}, {-109606, 1042832}, {-524288, 908093},
    {-848316, 616338}, {-1025662, 218011}, {-1025662, -218011}, {-848316, -616338}, {-524288, -908093}, {-109606, -1042832},
    {324028, -997255}, {701634, -779244}, {957922, -426494},
    // n = 16
    {1048576, 0}, {968758, 401273}, {741455, 741455}, {401273, 968758}, {0, 1048576}, {-401273, 968758},
    {-741455, 741455}, {-968758, 401273}, {-1048576, 0}, {-968758, -401273}, {-741455, -741455}, {-401273, -968758},
    {0, -1048576}, {401273, -968758}, {741455, -741455}, {968758, -401273},
    // n = 17
    {1048576, 0}, {977768, 378789}, {774907, 706421}, {467391, 938647}, {96750, 1044103}, {-286956, 1008547},
    {-631908, 836782}, {-891517, 552004}, {-1030722, 192675}, {-1030722, -192675}, {-891517, -552004}, {-631908, -836782},
    {-286956, -1008547}, {96750, -1044103}, {467391, -938647}, {774907, -706421}, {977768, -378789},
    // n = 18
    {1048576, 0}, {985339, 358634}, {803256, 674012}, {524288, 908093}, {182083, 1032646}, {-182083, 1032646},
    {-524288, 908093}, {-803256, 674012}, {-985339, 358634}, {-1048576, 0}, {-985339, -358634}, {-803256, -674012},
    {-524288, -908093}, {-182083, -1032646}, {182083, -1032646}, {524288, -908093}, {803256, -674012}, {985339, -358634},
    // n = 19
    {1048576, 0}, {991761, 340472}, {827474, 644049}, {573517, 877833}, {257410, 1016490}, {-86591, 1044995},
    {-421208, 960258}, {-710181, 771462}, {-922195, 499067}, {-1034275, 172590}, {-1034275, -172590}, {-922195, -499067},
    {-710181, -771462}, {-421208, -960258}, {-86591, -1044995}, {257410, -1016490}, {573517, -877833}, {827474, -644049},
    {991761, -340472},
    // n = 20
    {1048576, 0}, {997255, 324028}, {848316, 616338}, {616338, 848316}, {324028, 997255}, {0, 1048576},
    {-324028, 997255}, {-616338, 848316}, {-848316, 616338}, {-997255, 324028}, {-1048576, 0}, {-997255, -324028},
    {-848316, -616338}, {-616338, -848316}, {-324028, -997255}, {0, -1048576}, {324028, -997255}, {616338, -848316},
    {848316, -616338}, {997255, -324028},
    // n = 21
    {1048576, 0}, {1001991, 309073}, {866374, 590684}, {653776, 819810}, {383088, 976092}, {78360, 1045644},
    {-233330, 1022286}, {-524288, 908093}, {-768661, 713213}, {-944734, 454960}, {-1036864, 156282}, {-1036864, -156282},
    {-944734, -454960}, {-768661, -713213}, {-524288, -908093}, {-233330, -1022286}, {78360, -1045644}, {383088, -976092},
    {653776, -819810}, {866374, -590684}, {1001991, -309073},
    // n = 22
    {1048576, 0}, {1006101, 295418}, {882118, 566903}, {686671, 792461}, {435594, 953818}, {149228, 1037903},
    {-149228, 1037903}, {-435594, 953818}, {-686671, 792461}, {-882118, 566903}, {-1006101, 295418}, {-1048576, 0},
    {-1006101, -295418}, {-882118, -566903}, {-686671, -792461}, {-435594, -953818}, {-149228, -1037903}, {149228, -1037903},
    {435594, -953818}, {686671, -792461}, {882118, -566903}, {1006101, -295418},
    // n = 23
    {1048576, 0}, {1009692, 282902}, {895924, 544823}, {715709, 766337}, {482413, 931015}, {213339, 1026644},
    {-71557, 1046132}, {-351147, 988032}, {-604693, 856655}, {-813392, 661744}, {-961766, 417754}, {-1038810, 142781},
    {-1038810, -142781}, {-961766, -417754}, {-813392, -661744}, {-604693, -856655}, {-351147, -988032}, {-71557, -1046132},
    {213339, -1026644}, {482413, -931015}, {715709, -766337}, {895924, -544823}, {1009692, -282902},
    // n = 24
    {1048576, 0}, {1012847, 271391}, {908093, 524288}, {741455, 741455}, {524288, 908093}, {271391, 1012847},
    {0, 1048576}, {-271391, 1012847}, {-524288, 908093}, {-741455, 741455}, {-908093, 524288}, {-1012847, 271391},
    {-1048576, 0}, {-1012847, -271391}, {-908093, -524288}, {-741455, -741455}, {-524288, -908093}, {-271391, -1012847},
    {0, -1048576}, {271391, -1012847}, {524288, -908093}, {741455, -741455}, {908093, -524288}, {1012847, -271391},
    // n = 25
    {1048576, 0}, {1015633, 260770}, {918874, 505155}, {764379, 717800}, {561855, 885342}, {324028, 997255},
    {65841, 1046507}, {-196484, 1030003}, {-446462, 948780}, {-668387, 807942}, {-848316, 616338}, {-974941, 386007},
    {-1040308, 131421}, {-1040308, -131421}, {-974941, -386007}, {-848316, -616338}, {-668387, -807942}, {-446462, -948780},
    {-196484, -1030003}, {65841, -1046507}, {324028, -997255}, {561855, -885342}, {764379, -717800}, {918874, -505155},
    {1015633, -260770},
    // n = 26
    {1048576, 0}, {1018106, 250941}, {928468, 487298}, {784870, 695335}, {595659, 862961}, {371830, 980436},
    {126392, 1040931}, {-126392, 1040931}, {-371830, 980436}, {-595659, 862961}, {-784870, 695335}, {-928468, 487298},
    {-1018106, 250941}, {-1048576, 0}, {-1018106, -250941}, {-928468, -487298}, {-784870, -695335}, {-595659, -862961},
    {-371830, -980436}, {-126392, -1040931}, {126392, -1040931}, {371830, -980436}, {595659, -862961}, {784870, -695335},
    {928468, -487298}, {1018106, -250941},
    // n = 27
    {1048576, 0}, {1020311, 241818}, {937042, 470600}, {803256, 674012}, {626166, 841087}, {415320, 962819},
    {182083, 1032646}, {-60969, 1046802}, {-300735, 1004525}, {-524288, 908093}, {-719577, 762707}, {-876072, 576202},
    {-985339, 358634}, {-1041486, 121732}, {-1041486, -121732}, {-985339, -358634}, {-876072, -576202}, {-719577, -762707},
    {-524288, -908093}, {-300735, -1004525}, {-60969, -1046802}, {182083, -1032646}, {415320, -962819}, {626166, -841087},
    {803256, -674012}, {937042, -470600}, {1020311, -241818},
    // n = 28
    {1048576, 0}, {1022286, 233330}, {944734, 454960}, {819810, 653776}, {653776, 819810}, {454960, 944734},
    {233330, 1022286}, {0, 1048576}, {-233330, 1022286}, {-454960, 944734}, {-653776, 819810}, {-819810, 653776},
    {-944734, 454960}, {-1022286, 233330}, {-1048576, 0}, {-1022286, -233330}, {-944734, -454960}, {-819810, -653776},
    {-653776, -819810}, {-454960, -944734}, {-233330, -1022286}, {0, -1048576}, {233330, -1022286}, {454960, -944734},
    {653776, -819810}, {819810, -653776}, {944734, -454960}, {1022286, -233330},
    // n = 29
    {1048576, 0}, {1024061, 225413}, {951662, 440286}, {834764, 634571}, {678834, 799185}, {491162, 926430},
    {280524, 1010355}, {56769, 1047038}, {-169641, 1034763}, {-388118, 974103}, {-588447, 867895}, {-761261, 721105},
    {-898480, 540597}, {-993686, 334812}, {-1042429, 113371}, {-1042429, -113371}, {-993686, -334812}, {-898480, -540597},
    {-761261, -721105}, {-588447, -867895}, {-388118, -974103}, {-169641, -1034763}, {56769, -1047038}, {280524, -1010355},
    {491162, -926430}, {678834, -799185}, {834764, -634571}, {951662, -440286}, {1024061, -225413},
    // n = 30
    {1048576, 0}, {1025662, 218011}, {957922, 426494}, {848316, 616338}, {701634, 779244}, {524288, 908093},
    {324028, 997255}, {109606, 1042832}, {-109606, 1042832}, {-324028, 997255}, {-524288, 908093}, {-701634, 779244},
    {-848316, 616338}, {-957922, 426494}, {-1025662, 218011}, {-1048576, 0}, {-1025662, -218011}, {-957922, -426494},
    {-848316, -616338}, {-701634, -779244}, {-524288, -908093}, {-324028, -997255}, {-109606, -1042832}, {109606, -1042832},
    {324028, -997255}, {524288, -908093}, {701634, -779244}, {848316, -616338}, {957922, -426494}, {1025662, -218011},
    // n = 31
    {1048576, 0}, {1027112, 211077}, {963597, 413512}, {860633, 599018}, {722434, 760000}, {554659, 889868},
    {364176, 983304}, {158784, 1036484}, {-53110, 1047230}, {-262828, 1015102}, {-461787, 941416}, {-641840, 829188},
    {-795616, 683014}, {-916819, 508876}, {-1000488, 313905}, {-1043196, 106083}, {-1043196, -106083}, {-1000488, -313905},
    {-916819, -508876}, {-795616, -683014}, {-641840, -829188}, {-461787, -941416}, {-262828, -1015102}, {-53110, -1047230},
    {158784, -1036484}, {364176, -983304}, {554659, -889868}, {722434, -760000}, {860633, -599018}, {963597, -413512},
    {1027112, -211077},
    // n = 32
    {1048576, 0}, {1028428, 204567}, {968758, 401273}, {871859, 582558}, {741455, 741455}, {582558, 871859},
    {401273, 968758}, {204567, 1028428}, {0, 1048576}, {-204567, 1028428}, {-401273, 968758}, {-582558, 871859},
    {-741455, 741455}, {-871859, 582558}, {-968758, 401273}, {-1028428, 204567}, {-1048576, 0}, {-1028428, -204567},
    {-968758, -401273}, {-871859, -582558}, {-741455, -741455}, {-582558, -871859}, {-401273, -968758}, {-204567, -1028428},
    {0, -1048576}, {204567, -1028428}, {401273, -968758}, {582558, -871859}, {741455, -741455}, {871859, -582558},
    {968758, -401273}, {1028428, -204567},
    // n = 33
    {1048576, 0}, {1029627, 198444}, {973464, 389716}, {882118, 566903}, {758890, 723600}, {608234, 854145},
    {435594, 953818}, {247211, 1019018}, {49893, 1047388}, {-149228, 1037903}, {-342956, 990905}, {-524288, 908093},
    {-686671, 792461}, {-824236, 648187}, {-932012, 480485}, {-1006101, 295418}, {-1043828, 99673}, {-1043828, -99673},
    {-1006101, -295418}, {-932012, -480485}, {-824236, -648187}, {-686671, -792461}, {-524288, -908093}, {-342956, -990905},
    {-149228, -1037903}, {49893, -1047388}, {247211, -1019018}, {435594, -953818}, {608234, -854145}, {758890, -723600},
    {882118, -566903}, {973464, -389716}, {1029627, -198444},
    // n = 34
    {1048576, 0}, {1030722, 192675}, {977768, 378789}, {891517, 552004}, {774907, 706421}, {631908, 836782},
    {467391, 938647}, {286956, 1008547}, {96750, 1044103}, {-96750, 1044103}, {-286956, 1008547}, {-467391, 938647},
    {-631908, 836782}, {-774907, 706421}, {-891517, 552004}, {-977768, 378789}, {-1030722, 192675}, {-1048576, 0},
    {-1030722, -192675}, {-977768, -378789}, {-891517, -552004}, {-774907, -706421}, {-631908, -836782}, {-467391, -938647},
    {-286956, -1008547}, {-96750, -1044103}, {96750, -1044103}, {286956, -1008547}, {467391, -938647}, {631908, -836782},
    {774907, -706421}, {891517, -552004}, {977768, -378789}, {1030722, -192675},
    // n = 35
    {1048576, 0}, {1031725, 187230}, {981713, 368443}, {900149, 537814}, {789653, 689899}, {653776, 819810},
    {496887, 923371}, {324028, 997255}, {140754, 1039086}, {-47044, 1047520}, {-233330, 1022286}, {-412117, 964195},
    {-577657, 875113}, {-724632, 757905}, {-848316, 616338}, {-944734, 454960}, {-1010788, 278960}, {-1044355, 93994},
    {-1044355, -93994}, {-1010788, -278960}, {-944734, -454960}, {-848316, -616338}, {-724632, -757905}, {-577657, -875113},
    {-412117, -964195}, {-233330, -1022286}, {-47044, -1047520}, {140754, -1039086}, {324028, -997255}, {496887, -923371},
    {653776, -819810}, {789653, -689899}, {900149, -537814}, {981713, -368443}, {1031725, -187230},
    // n = 36
    {1048576, 0}, {1032646, 182083}, {985339, 358634}, {908093, 524288}, {803256, 674012}, {674012, 803256},
    {524288, 908093}, {358634, 985339}, {182083, 1032646}, {0, 1048576}, {-182083, 1032646}, {-358634, 985339},
    {-524288, 908093}, {-674012, 803256}, {-803256, 674012}, {-908093, 524288}, {-985339, 358634}, {-1032646, 182083},
    {-1048576, 0}, {-1032646, -182083}, {-985339, -358634}, {-908093, -524288}, {-803256, -674012}, {-674012, -803256},
    {-524288, -908093}, {-358634, -985339}, {-182083, -1032646}, {0, -1048576}, {182083, -1032646}, {358634, -985339},
    {524288, -908093}, {674012, -803256}, {803256, -674012}, {908093, -524288}, {985339, -358634}, {1032646, -182083},
    // n = 37
    {1048576, 0}, {1033493, 177210}, {988679, 349322}, {915422, 511385}, {815830, 658736}, {692768, 787137},
    {549776, 892893}, {390968, 972962}, {220913, 1025041}, {44503, 1047631}, {-133188, 1040083}, {-307047, 1002613},
    {-472073, 936301}, {-623518, 843052}, {-757026, 725550}, {-868755, 587176}, {-955492, 431910}, {-1014742, 264218},
    {-1044798, 88925}, {-1044798, -88925}, {-1014742, -264218}, {-955492, -431910}, {-868755, -587176}, {-757026, -725550},
    {-623518, -843052}, {-472073, -936301}, {-307047, -1002613}, {-133188, -1040083}, {44503, -1047631}, {220913, -1025041},
    {390968, -972962}, {549776, -892893}, {692768, -787137}, {815830, -658736}, {915422, -511385}, {988679, -349322},
    {1033493, -177210},
    // n = 38
    {1048576, 0}, {1034275, 172590}, {991761, 340472}, {922195, 499067}, {827474, 644049}, {710181, 771462},
    {573517, 877833}, {421208, 960258}, {257410, 1016490}, {86591, 1044995}, {-86591, 1044995}, {-257410, 1016490},
    {-421208, 960258}, {-573517, 877833}, {-710181, 771462}, {-827474, 644049}, {-922195, 499067}, {-991761, 340472},
    {-1034275, 172590}, {-1048576, 0}, {-1034275, -172590}, {-991761, -340472}, {-922195, -499067}, {-827474, -644049},
    {-710181, -771462}, {-573517, -877833}, {-421208, -960258}, {-257410, -1016490}, {-86591, -1044995}, {86591, -1044995},
    {257410, -1016490}, {421208, -960258}, {573517, -877833}, {710181, -771462}, {827474, -644049}, {922195, -499067},
    {991761, -340472}, {1034275, -172590},
    // n = 39
    {1048576, 0}, {1034997, 168203}, {994613, 332050}, {928468, 487298}, {838276, 629924}, {726374, 756236},
    {595659, 862961}, {449517, 947336}, {291732, 1007176}, {126392, 1040931}, {-42222, 1047726}, {-209742, 1027385},
    {-371830, 980436}, {-524288, 908093}, {-663167, 812232}, {-784870, 695335}, {-886246, 560428}, {-964668, 411007},
    {-1018106, 250941}, {-1045176, 84375}, {-1045176, -84375}, {-1018106, -250941}, {-964668, -411007}, {-886246, -560428},
    {-784870, -695335}, {-663167, -812232}, {-524288, -908093}, {-371830, -980436}, {-209742, -1027385}, {-42222, -1047726},
    {126392, -1040931}, {291732, -1007176}, {449517, -947336}, {595659, -862961}, {726374, -756236}, {838276, -629924},
    {928468, -487298}, {994613, -332050}, {1034997, -168203},
    // n = 40
    {1048576, 0}, {1035666, 164033}, {997255, 324028}, {934288, 476044}, {848316, 616338}, {741455, 741455},
    {616338, 848316}, {476044, 934288}, {324028, 997255}, {164033, 1035666}, {0, 1048576}, {-164033, 1035666},
    {-324028, 997255}, {-476044, 934288}, {-616338, 848316}, {-741455, 741455}, {-848316, 616338}, {-934288, 476044},
    {-997255, 324028}, {-1035666, 164033}, {-1048576, 0}, {-1035666, -164033}, {-997255, -324028}, {-934288, -476044},
    {-848316, -616338}, {-741455, -741455}, {-616338, -848316}, {-476044, -934288}, {-324028, -997255}, {-164033, -1035666},
    {0, -1048576}, {164033, -1035666}, {324028, -997255}, {476044, -934288}, {616338, -848316}, {741455, -741455},
    {848316, -616338}, {934288, -476044}, {997255, -324028}, {1035666, -164033},
    // n = 41
    {1048576, 0}, {1036287, 160064}, {999709, 316377}, {939698, 465274}, {857661, 603265}, {755522, 727117},
    {635673, 833925}, {500926, 921187}, {354436, 986857}, {199640, 1029396}, {40163, 1047807}, {-120254, 1041658},
    {-277853, 1011093}, {-428940, 956829}, {-569972, 880138}, {-697645, 782818}, {-808965, 667149}, {-901324, 535842},
    {-972557, 391976}, {-1020994, 238922}, {-1045499, 80268}, {-1045499, -80268}, {-1020994, -238922}, {-972557, -391976},
    {-901324, -535842}, {-808965, -667149}, {-697645, -782818}, {-569972, -880138}, {-428940, -956829}, {-277853, -1011093},
    {-120254, -1041658}, {40163, -1047807}, {199640, -1029396}, {354436, -986857}, {500926, -921187}, {635673, -833925},
    {755522, -727117}, {857661, -603265}, {939698, -465274}, {999709, -316377}, {1036287, -160064},
    // n = 42
    {1048576, 0}, {1036864, 156282}, {1001991, 309073}, {944734, 454960}, {866374, 590684}, {768661, 713213},
    {653776, 819810}, {524288, 908093}, {383088, 976092}, {233330, 1022286}, {78360, 1045644}, {-78360, 1045644},
    {-233330, 1022286}, {-383088, 976092}, {-524288, 908093}, {-653776, 819810}, {-768661, 713213}, {-866374, 590684},
    {-944734, 454960}, {-1001991, 309073}, {-1036864, 156282}, {-1048576, 0}, {-1036864, -156282}, {-1001991, -309073},
    {-944734, -454960}, {-866374, -590684}, {-768661, -713213}, {-653776, -819810}, {-524288, -908093}, {-383088, -976092},
    {-233330, -1022286}, {-78360, -1045644}, {78360, -1045644}, {233330, -1022286}, {383088, -976092}, {524288, -908093},
    {653776, -819810}, {768661, -713213}, {866374, -590684}, {944734, -454960}, {1001991, -309073}, {1036864, -156282},
    // n = 43
    {1048576, 0}, {1037402, 152674}, {1004117, 302094}, {949431, 445075}, {874510, 578570}, {780950, 699734},
    {670746, 805985}, {546246, 895057}, {410103, 965053}, {265220, 1014480}, {114684, 1042286}, {-38296, 1047876},
    {-190460, 1031134}, {-338565, 992414}, {-479453, 932543}, {-610123, 852796}, {-727790, 754874}, {-829944, 640862},
    {-914410, 513192}, {-979387, 374584}, {-1023490, 227992}, {-1045779, 76541}, {-1045779, -76541}, {-1023490, -227992},
    {-979387, -374584}, {-914410, -513192}, {-829944, -640862}, {-727790, -754874}, {-610123, -852796}, {-479453, -932543},
    {-338565, -992414}, {-190460, -1031134}, {-38296, -1047876}, {114684, -1042286}, {265220, -1014480}, {410103, -965053},
    {546246, -895057}, {670746, -805985}, {780950, -699734}, {874510, -578570}, {949431, -445075}, {1004117, -302094},
    {1037402, -152674},
    // n = 44
    {1048576, 0}, {1037903, 149228}, {1006101, 295418}, {953818, 435594}, {882118, 566903}, {792461, 686671},
    {686671, 792461}, {566903, 882118}, {435594, 953818}, {295418, 1006101}, {149228, 1037903}, {0, 1048576},
    {-149228, 1037903}, {-295418, 1006101}, {-435594, 953818}, {-566903, 882118}, {-686671, 792461}, {-792461, 686671},
    {-882118, 566903}, {-953818, 435594}, {-1006101, 295418}, {-1037903, 149228}, {-1048576, 0}, {-1037903, -149228},
    {-1006101, -295418}, {-953818, -435594}, {-882118, -566903}, {-792461, -686671}, {-686671, -792461}, {-566903, -882118},
    {-435594, -953818}, {-295418, -1006101}, {-149228, -1037903}, {0, -1048576}, {149228, -1037903}, {295418, -1006101},
    {435594, -953818}, {566903, -882118}, {686671, -792461}, {792461, -686671}, {882118, -566903}, {953818, -435594},
    {1006101, -295418}, {1037903, -149228},
    // n = 45
    {1048576, 0}, {1038371, 145934}, {1007956, 289027}, {957922, 426494}, {889243, 555661}, {803256, 674012},
    {701634, 779244}, {586356, 869309}, {459665, 942454}, {324028, 997255}, {182083, 1032646}, {36595, 1047937},
    {-109606, 1042832}, {-253673, 1017429}, {-392803, 972223}, {-524288, 908093}, {-645568, 826289}, {-754282, 728402},
    {-848316, 616338}, {-925838, 492277}, {-985339, 358634}, {-1025662, 218011}, {-1046022, 73145}, {-1046022, -73145},
    {-1025662, -218011}, {-985339, -358634}, {-925838, -492277}, {-848316, -616338}, {-754282, -728402}, {-645568, -826289},
    {-524288, -908093}, {-392803, -972223}, {-253673, -1017429}, {-109606, -1042832}, {36595, -1047937}, {182083, -1032646},
    {324028, -997255}, {459665, -942454}, {586356, -869309}, {701634, -779244}, {803256, -674012}, {889243, -555661},
    {957922, -426494}, {1007956, -289027}, {1038371, -145934},
    // n = 46
    {1048576, 0}, {1038810, 142781}, {1009692, 282902}, {961766, 417754}, {895924, 544823}, {813392, 661744},
    {715709, 766337}, {604693, 856655}, {482413, 931015}, {351147, 988032}, {213339, 1026644}, {71557, 1046132},
    {-71557, 1046132}, {-213339, 1026644}, {-351147, 988032}, {-482413, 931015}, {-604693, 856655}, {-715709, 766337},
    {-813392, 661744}, {-895924, 544823}, {-961766, 417754}, {-1009692, 282902}, {-1038810, 142781}, {-1048576, 0},
    {-1038810, -142781}, {-1009692, -282902}, {-961766, -417754}, {-895924, -544823}, {-813392, -661744}, {-715709, -766337},
    {-604693, -856655}, {-482413, -931015}, {-351147, -988032}, {-213339, -1026644}, {-71557, -1046132}, {71557, -1046132},
    {213339, -1026644}, {351147, -988032}, {482413, -931015}, {604693, -856655}, {715709, -766337}, {813392, -661744},
    {895924, -544823}, {961766, -417754}, {1009692, -282902}, {1038810, -142781},
    // n = 47
    {1048576, 0}, {1039220, 139762}, {1011319, 277029}, {965371, 409353}, {902196, 534372}, {822922, 649855},
    {728962, 753741}, {621994, 844177}, {503926, 919549}, {376866, 978511}, {243081, 1020011}, {104958, 1043310},
    {-35038, 1047990}, {-174409, 1033970}, {-310667, 1001498}, {-441382, 951154}, {-564220, 883837}, {-676990, 800747},
    {-777679, 703369}, {-864490, 593439}, {-935874, 472918}, {-990557, 343959}, {-1027564, 208862}, {-1046234, 70037},
    {-1046234, -70037}, {-1027564, -208862}, {-990557, -343959}, {-935874, -472918}, {-864490, -593439}, {-777679, -703369},
    {-676990, -800747}, {-564220, -883837}, {-441382, -951154}, {-310667, -1001498}, {-174409, -1033970}, {-35038, -1047990},
    {104958, -1043310}, {243081, -1020011}, {376866, -978511}, {503926, -919549}, {621994, -844177}, {728962, -753741},
    {822922, -649855}, {902196, -534372}, {965371, -409353}, {1011319, -277029}, {1039220, -139762},
    // n = 48
    {1048576, 0}, {1039605, 136867}, {1012847, 271391}, {968758, 401273}, {908093, 524288}, {831891, 638333},
    {741455, 741455}, {638333, 831891}, {524288, 908093}, {401273, 968758}, {271391, 1012847}, {136867, 1039605},
    {0, 1048576}, {-136867, 1039605}, {-271391, 1012847}, {-401273, 968758}, {-524288, 908093}, {-638333, 831891},
    {-741455, 741455}, {-831891, 638333}, {-908093, 524288}, {-968758, 401273}, {-1012847, 271391}, {-1039605, 136867},
    {-1048576, 0}, {-1039605, -136867}, {-1012847, -271391}, {-968758, -401273}, {-908093, -524288}, {-831891, -638333},
    {-741455, -741455}, {-638333, -831891}, {-524288, -908093}, {-401273, -968758}, {-271391, -1012847}, {-136867, -1039605},
    {0, -1048576}, {136867, -1039605}, {271391, -1012847}, {401273, -968758}, {524288, -908093}, {638333, -831891},
    {741455, -741455}, {831891, -638333}, {908093, -524288}, {968758, -401273}, {1012847, -271391}, {1039605, -136867},
    // n = 49
    {1048576, 0}, {1039967, 134089}, {1014282, 265976}, {971943, 393496}, {913644, 514555}, {840343, 627164},
    {753244, 729476}, {653776, 819810}, {543574, 896682}, {424446, 958831}, {298349, 1005236}, {167353, 1035135},
    {33609, 1048037}, {-100687, 1043731}, {-233330, 1022286}, {-362142, 984055}, {-485007, 929667}, {-599908, 860013},
    {-704959, 776238}, {-798434, 679717}, {-878799, 572035}, {-944734, 454960}, {-995157, 330415}, {-1029239, 200444},
    {-1046422, 67182}, {-1046422, -67182}, {-1029239, -200444}, {-995157, -330415}, {-944734, -454960}, {-878799, -572035},
    {-798434, -679717}, {-704959, -776238}, {-599908, -860013}, {-485007, -929667}, {-362142, -984055}, {-233330, -1022286},
    {-100687, -1043731}, {33609, -1048037}, {167353, -1035135}, {298349, -1005236}, {424446, -958831}, {543574, -896682},
    {653776, -819810}, {753244, -729476}, {840343, -627164}, {913644, -514555}, {971943, -393496}, {1014282, -265976},
    {1039967, -134089},
    // n = 50
    {1048576, 0}, {1040308, 131421}, {1015633, 260770}, {974941, 386007}, {918874, 505155}, {848316, 616338},
    {764379, 717800}, {668387, 807942}, {561855, 885342}, {446462, 948780}, {324028, 997255}, {196484, 1030003},
    {65841, 1046507}, {-65841, 1046507}, {-196484, 1030003}, {-324028, 997255}, {-446462, 948780}, {-561855, 885342},
    {-668387, 807942}, {-764379, 717800}, {-848316, 616338}, {-918874, 505155}, {-974941, 386007}, {-1015633, 260770},
    {-1040308, 131421}, {-1048576, 0}, {-1040308, -131421}, {-1015633, -260770}, {-974941, -386007}, {-918874, -505155},
    {-848316, -616338}, {-764379, -717800}, {-668387, -807942}, {-561855, -885342}, {-446462, -948780}, {-324028, -997255},
    {-196484, -1030003}, {-65841, -1046507}, {65841, -1046507}, {196484, -1030003}, {324028, -997255}, {446462, -948780},
    {561855, -885342}, {668387, -807942}, {764379, -717800}, {848316, -616338}, {918874, -505155}, {974941, -386007},
    {1015633, -260770}, {1040308, -131421},
    // n = 51
    {1048576, 0}, {1040628, 128858}, {1016906, 255762}, {977768, 378789}, {923808, 496075}, {855844, 605840},
    {774907, 706421}, {682223, 796294}, {579197, 874095}, {467391, 938647}, {348499, 988969}, {224325, 1024300},
    {96750, 1044103}, {-32291, 1048079}, {-160843, 1036167}, {-286956, 1008547}, {-408720, 965639}, {-524288, 908093},
    {-631908, 836782}, {-729949, 752785}, {-816925, 657377}, {-891517, 552004}, {-952595, 438263}, {-999232, 317879},
    {-1030722, 192675}, {-1046587, 64551}, {-1046587, -64551}, {-1030722, -192675}, {-999232, -317879}, {-952595, -438263},
    {-891517, -552004}, {-816925, -657377}, {-729949, -752785}, {-631908, -836782}, {-524288, -908093}, {-408720, -965639},
    {-286956, -1008547}, {-160843, -1036167}, {-32291, -1048079}, {96750, -1044103}, {224325, -1024300}, {348499, -988969},
    {467391, -938647}, {579197, -874095}, {682223, -796294}, {774907, -706421}, {855844, -605840}, {923808, -496075},
    {977768, -378789}, {1016906, -255762}, {1040628, -128858},
    // n = 52
    {1048576, 0}, {1040931, 126392}, {1018106, 250941}, {980436, 371830}, {928468, 487298}, {862961, 595659},
    {784870, 695335}, {695335, 784870}, {595659, 862961}, {487298, 928468}, {371830, 980436}, {250941, 1018106},
    {126392, 1040931}, {0, 1048576}, {-126392, 1040931}, {-250941, 1018106}, {-371830, 980436}, {-487298, 928468},
    {-595659, 862961}, {-695335, 784870}, {-784870, 695335}, {-862961, 595659}, {-928468, 487298}, {-980436, 371830},
    {-1018106, 250941}, {-1040931, 126392}, {-1048576, 0}, {-1040931, -126392}, {-1018106, -250941}, {-980436, -371830},
    {-928468, -487298}, {-862961, -595659}, {-784870, -695335}, {-695335, -784870}, {-595659, -862961}, {-487298, -928468},
    {-371830, -980436}, {-250941, -1018106}, {-126392, -1040931}, {0, -1048576}, {126392, -1040931}, {250941, -1018106},
    {371830, -980436}, {487298, -928468}, {595659, -862961}, {695335, -784870}, {784870, -695335}, {862961, -595659},
    {928468, -487298}, {980436, -371830}, {1018106, -250941}, {1040931, -126392},
    // n = 53
    {1048576, 0}, {1041216, 124018}, {1019240, 246296}, {982956, 365116}, {932873, 478810}, {869695, 585784},
    {794308, 684534}, {707771, 773674}, {611298, 851954}, {506244, 918275}, {394084, 971704}, {276391, 1011494},
    {154819, 1037084}, {31073, 1048116}, {-93109, 1044434}, {-215984, 1026091}, {-335827, 993344}, {-450956, 946652},
    {-559754, 886672}, {-660695, 814244}, {-752361, 730387}, {-833465, 636276}, {-902870, 533234}, {-959600, 422706},
    {-1002859, 306244}, {-1032041, 185483}, {-1046734, 62118}, {-1046734, -62118}, {-1032041, -185483}, {-1002859, -306244},
    {-959600, -422706}, {-902870, -533234}, {-833465, -636276}, {-752361, -730387}, {-660695, -814244}, {-559754, -886672},
    {-450956, -946652}, {-335827, -993344}, {-215984, -1026091}, {-93109, -1044434}, {31073, -1048116}, {154819, -1037084},
    {276391, -1011494}, {394084, -971704}, {506244, -918275}, {611298, -851954}, {707771, -773674}, {794308, -684534},
    {869695, -585784}, {932873, -478810}, {982956, -365116}, {1019240, -246296}, {1041216, -124018},
    // n = 54
    {1048576, 0}, {1041486, 121732}, {1020311, 241818}, {985339, 358634}, {937042, 470600}, {876072, 576202},
    {803256, 674012}, {719577, 762707}, {626166, 841087}, {524288, 908093}, {415320, 962819}, {300735, 1004525},
    {182083, 1032646}, {60969, 1046802}, {-60969, 1046802}, {-182083, 1032646}, {-300735, 1004525}, {-415320, 962819},
    {-524288, 908093}, {-626166, 841087}, {-719577, 762707}, {-803256, 674012}, {-876072, 576202}, {-937042, 470600},
    {-985339, 358634}, {-1020311, 241818}, {-1041486, 121732}, {-1048576, 0}, {-1041486, -121732}, {-1020311, -241818},
    {-985339, -358634}, {-937042, -470600}, {-876072, -576202}, {-803256, -674012}, {-719577, -762707}, {-626166, -841087},
    {-524288, -908093}, {-415320, -962819}, {-300735, -1004525}, {-182083, -1032646}, {-60969, -1046802}, {60969, -1046802},
    {182083, -1032646}, {300735, -1004525}, {415320, -962819}, {524288, -908093}, {626166, -841087}, {719577, -762707},
    {803256, -674012}, {876072, -576202}, {937042, -470600}, {985339, -358634}, {1020311, -241818}, {1041486, -121732},
    // n = 55
    {1048576, 0}, {1041741, 119529}, {1021326, 237499}, {987595, 352373}, {940990, 462654}, {882118, 566903},
    {811746, 663762}, {730792, 751967}, {640311, 830370}, {541482, 897947}, {435594, 953818}, {324028, 997255},
    {208237, 1027691}, {89732, 1044730}, {-29943, 1048148}, {-149228, 1037903}, {-266567, 1014127}, {-380431, 977130},
    {-489336, 927395}, {-591862, 865570}, {-686671, 792461}, {-772529, 709021}, {-848316, 616338}, {-913043, 515619},
    {-965868, 408179}, {-1006101, 295418}, {-1033218, 178805}, {-1046866, 59862}, {-1046866, -59862}, {-1033218, -178805},
    {-1006101, -295418}, {-965868, -408179}, {-913043, -515619}, {-848316, -616338}, {-772529, -709021}, {-686671, -792461},
    {-591862, -865570}, {-489336, -927395}, {-380431, -977130}, {-266567, -1014127}, {-149228, -1037903}, {-29943, -1048148},
    {89732, -1044730}, {208237, -1027691}, {324028, -997255}, {435594, -953818}, {541482, -897947}, {640311, -830370},
    {730792, -751967}, {811746, -663762}, {882118, -566903}, {940990, -462654}, {987595, -352373}, {1021326, -237499},
    {1041741, -119529},
    // n = 56
    {1048576, 0}, {1041983, 117403}, {1022286, 233330}, {989733, 346323}, {944734, 454960}, {887855, 557876},
    {819810, 653776}, {741455, 741455}, {653776, 819810}, {557876, 887855}, {454960, 944734}, {346323, 989733},
    {233330, 1022286}, {117403, 1041983}, {0, 1048576}, {-117403, 1041983}, {-233330, 1022286}, {-346323, 989733},
    {-454960, 944734}, {-557876, 887855}, {-653776, 819810}, {-741455, 741455}, {-819810, 653776}, {-887855, 557876},
    {-944734, 454960}, {-989733, 346323}, {-1022286, 233330}, {-1041983, 117403}, {-1048576, 0}, {-1041983, -117403},
    {-1022286, -233330}, {-989733, -346323}, {-944734, -454960}, {-887855, -557876}, {-819810, -653776}, {-741455, -741455},
    {-653776, -819810}, {-557876, -887855}, {-454960, -944734}, {-346323, -989733}, {-233330, -1022286}, {-117403, -1041983},
    {0, -1048576}, {117403, -1041983}, {233330, -1022286}, {346323, -989733}, {454960, -944734}, {557876, -887855},
    {653776, -819810}, {741455, -741455}, {819810, -653776}, {887855, -557876}, {944734, -454960}, {989733, -346323},
    {1022286, -233330}, {1041983, -117403},
    // n = 57
    {1048576, 0}, {1042212, 115352}, {1023197, 229304}, {991761, 340472}, {948287, 447508}, {893302, 549111},
    {827474, 644049}, {751601, 731169}, {666605, 809413}, {573517, 877833}, {473467, 935596}, {367670, 982003},
    {257410, 1016490}, {144026, 1038638}, {28893, 1048178}, {-86591, 1044995}, {-201023, 1029126}, {-313015, 1000766},
    {-421208, 960258}, {-524288, 908093}, {-621004, 844906}, {-710181, 771462}, {-790738, 688654}, {-861696, 597487},
    {-922195, 499067}, {-971499, 394589}, {-1009011, 285321}, {-1034275, 172590}, {-1046984, 57764}, {-1046984, -57764},
    {-1034275, -172590}, {-1009011, -285321}, {-971499, -394589}, {-922195, -499067}, {-861696, -597487}, {-790738, -688654},
    {-710181, -771462}, {-621004, -844906}, {-524288, -908093}, {-421208, -960258}, {-313015, -1000766}, {-201023, -1029126},
    {-86591, -1044995}, {28893, -1048178}, {144026, -1038638}, {257410, -1016490}, {367670, -982003}, {473467, -935596},
    {573517, -877833}, {666605, -809413}, {751601, -731169}, {827474, -644049}, {893302, -549111}, {948287, -447508},
    {991761, -340472}, {1023197, -229304}, {1042212, -115352},
    // n = 58
    {1048576, 0}, {1042429, 113371}, {1024061, 225413}, {993686, 334812}, {951662, 440286}, {898480, 540597},
    {834764, 634571}, {761261, 721105}, {678834, 799185}, {588447, 867895}, {491162, 926430}, {388118, 974103},
    {280524, 1010355}, {169641, 1034763}, {56769, 1047038}, {-56769, 1047038}, {-169641, 1034763}, {-280524, 1010355},
    {-388118, 974103}, {-491162, 926430}, {-588447, 867895}, {-678834, 799185}, {-761261, 721105}, {-834764, 634571},
    {-898480, 540597}, {-951662, 440286}, {-993686, 334812}, {-1024061, 225413}, {-1042429, 113371}, {-1048576, 0},
    {-1042429, -113371}, {-1024061, -225413}, {-993686, -334812}, {-951662, -440286}, {-898480, -540597}, {-834764, -634571},
    {-761261, -721105}, {-678834, -799185}, {-588447, -867895}, {-491162, -926430}, {-388118, -974103}, {-280524, -1010355},
    {-169641, -1034763}, {-56769, -1047038}, {56769, -1047038}, {169641, -1034763}, {280524, -1010355}, {388118, -974103},
    {491162, -926430}, {588447, -867895}, {678834, -799185}, {761261, -721105}, {834764, -634571}, {898480, -540597},
    {951662, -440286}, {993686, -334812}, {1024061, -225413}, {1042429, -113371},
    // n = 59
    {1048576, 0}, {1042636, 111457}, {1024882, 221651}, {995516, 329333}, {954870, 433284}, {903405, 532326},
    {841704, 625336}, {770467, 711262}, {690499, 789128}, {602708, 858053}, {508088, 917256}, {407712, 966066},
    {302715, 1003930}, {194289, 1030419}, {83662, 1045233}, {-27914, 1048204}, {-139173, 1039299}, {-248855, 1018618},
    {-355718, 986396}, {-458550, 942997}, {-556187, 888914}, {-647521, 824759}, {-731520, 751259}, {-807229, 669248},
    {-873793, 579653}, {-930456, 483491}, {-976577, 381850}, {-1011632, 275883}, {-1035226, 166790}, {-1047090, 55807},
    {-1047090, -55807}, {-1035226, -166790}, {-1011632, -275883}, {-976577, -381850}, {-930456, -483491}, {-873793, -579653},
    {-807229, -669248}, {-731520, -751259}, {-647521, -824759}, {-556187, -888914}, {-458550, -942997}, {-355718, -986396},
    {-248855, -1018618}, {-139173, -1039299}, {-27914, -1048204}, {83662, -1045233}, {194289, -1030419}, {302715, -1003930},
    {407712, -966066}, {508088, -917256}, {602708, -858053}, {690499, -789128}, {770467, -711262}, {841704, -625336},
    {903405, -532326}, {954870, -433284}, {995516, -329333}, {1024882, -221651}, {1042636, -111457},
    // n = 60
    {1048576, 0}, {1042832, 109606}, {1025662, 218011}, {997255, 324028}, {957922, 426494}, {908093, 524288},
    {848316, 616338}, {779244, 701634}, {701634, 779244}, {616338, 848316}, {524288, 908093}, {426494, 957922},
    {324028, 997255}, {218011, 1025662}, {109606, 1042832}, {0, 1048576}, {-109606, 1042832}, {-218011, 1025662},
    {-324028, 997255}, {-426494, 957922}, {-524288, 908093}, {-616338, 848316}, {-701634, 779244}, {-779244, 701634},
    {-848316, 616338}, {-908093, 524288}, {-957922, 426494}, {-997255, 324028}, {-1025662, 218011}, {-1042832, 109606},
    {-1048576, 0}, {-1042832, -109606}, {-1025662, -218011}, {-997255, -324028}, {-957922, -426494}, {-908093, -524288},
    {-848316, -616338}, {-779244, -701634}, {-701634, -779244}, {-616338, -848316}, {-524288, -908093}, {-426494, -957922},
    {-324028, -997255}, {-218011, -1025662}, {-109606, -1042832}, {0, -1048576}, {109606, -1042832}, {218011, -1025662},
    {324028, -997255}, {426494, -957922}, {524288, -908093}, {616338, -848316}, {701634, -779244}, {779244, -701634},
    {848316, -616338}, {908093, -524288}, {957922, -426494}, {997255, -324028}, {1025662, -218011}, {1042832, -109606},
    // n = 61
    {1048576, 0}, {1043018, 107816}, {1026405, 214488}, {998911, 318888}, {960828, 419906}, {912560, 516474},
    {854619, 607567}, {787619, 692220}, {712270, 769535}, {629370, 838692}, {539799, 898960}, {444506, 949698},
    {344502, 990369}, {240845, 1020542}, {134635, 1039897}, {26999, 1048228}, {-80924, 1045449}, {-187990, 1031587},
    {-293062, 1006790}, {-395028, 971321}, {-492806, 925556}, {-585361, 869979}, {-671711, 805181}, {-750940, 731847},
    {-822209, 650756}, {-884763, 562767}, {-937938, 468812}, {-981170, 369887}, {-1014002, 267042}, {-1036085, 161366},
    {-1047186, 53979}, {-1047186, -53979}, {-1036085, -161366}, {-1014002, -267042}, {-981170, -369887}, {-937938, -468812},
    {-884763, -562767}, {-822209, -650756}, {-750940, -731847}, {-671711, -805181}, {-585361, -869979}, {-492806, -925556},
    {-395028, -971321}, {-293062, -1006790}, {-187990, -1031587}, {-80924, -1045449}, {26999, -1048228}, {134635, -1039897},
    {240845, -1020542}, {344502, -990369}, {444506, -949698}, {539799, -898960}, {629370, -838692}, {712270, -769535},
    {787619, -692220}, {854619, -607567}, {912560, -516474}, {960828, -419906}, {998911, -318888}, {1026405, -214488},
    {1043018, -107816},
    // n = 62
    {1048576, 0}, {1043196, 106083}, {1027112, 211077}, {1000488, 313905}, {963597, 413512}, {916819, 508876},
    {860633, 599018}, {795616, 683014}, {722434, 760000}, {641840, 829188}, {554659, 889868}, {461787, 941416},
    {364176, 983304}, {262828, 1015102}, {158784, 1036484}, {53110, 1047230}, {-53110, 1047230}, {-158784, 1036484},
    {-262828, 1015102}, {-364176, 983304}, {-461787, 941416}, {-554659, 889868}, {-641840, 829188}, {-722434, 760000},
    {-795616, 683014}, {-860633, 599018}, {-916819, 508876}, {-963597, 413512}, {-1000488, 313905}, {-1027112, 211077},
    {-1043196, 106083}, {-1048576, 0}, {-1043196, -106083}, {-1027112, -211077}, {-1000488, -313905}, {-963597, -413512},
    {-916819, -508876}, {-860633, -599018}, {-795616, -683014}, {-722434, -760000}, {-641840, -829188}, {-554659, -889868},
    {-461787, -941416}, {-364176, -983304}, {-262828, -1015102}, {-158784, -1036484}, {-53110, -1047230}, {53110, -1047230},
    {158784, -1036484}, {262828, -1015102}, {364176, -983304}, {461787, -941416}, {554659, -889868}, {641840, -829188},
    {722434, -760000}, {795616, -683014}, {860633, -599018}, {916819, -508876}, {963597, -413512}, {1000488, -313905},
    {1027112, -211077}, {1043196, -106083},
    // n = 63
    {1048576, 0}, {1043365, 104404}, {1027785, 207771}, {1001991, 309073}, {966238, 407303}, {920882, 501486},
    {866374, 590684}, {803256, 674012}, {732154, 750641}, {653776, 819810}, {568901, 880831}, {478372, 933098},
    {383088, 976092}, {283997, 1009385}, {182083, 1032646}, {78360, 1045644}, {-26142, 1048250}, {-130384, 1040438},
    {-233330, 1022286}, {-333957, 993974}, {-431266, 955783}, {-524288, 908093}, {-612100, 851379}, {-693828, 786203},
    {-768661, 713213}, {-835854, 633135}, {-894740, 546764}, {-944734, 454960}, {-985339, 358634}, {-1016151, 258744},
    {-1036864, 156282}, {-1047273, 52267}, {-1047273, -52267}, {-1036864, -156282}, {-1016151, -258744}, {-985339, -358634},
    {-944734, -454960}, {-894740, -546764}, {-835854, -633135}, {-768661, -713213}, {-693828, -786203}, {-612100, -851379},
    {-524288, -908093}, {-431266, -955783}, {-333957, -993974}, {-233330, -1022286}, {-130384, -1040438}, {-26142, -1048250},
    {78360, -1045644}, {182083, -1032646}, {283997, -1009385}, {383088, -976092}, {478372, -933098}, {568901, -880831},
    {653776, -819810}, {732154, -750641}, {803256, -674012}, {866374, -590684}, {920882, -501486}, {966238, -407303},
    {1001991, -309073}, {1027785, -207771}, {1043365, -104404},
    // n = 64
    {1048576, 0}, {1043527, 102778}, {1028428, 204567}, {1003425, 304386}, {968758, 401273}, {924761, 494295},
    {871859, 582558}, {810560, 665210}, {741455, 741455}, {665210, 810560}, {582558, 871859}, {494295, 924761},
    {401273, 968758}, {304386, 1003425}, {204567, 1028428}, {102778, 1043527}, {0, 1048576}, {-102778, 1043527},
    {-204567, 1028428}, {-304386, 1003425}, {-401273, 968758}, {-494295, 924761}, {-582558, 871859}, {-665210, 810560},
    {-741455, 741455}, {-810560, 665210}, {-871859, 582558}, {-924761, 494295}, {-968758, 401273}, {-1003425, 304386},
    {-1028428, 204567}, {-1043527, 102778}, {-1048576, 0}, {-1043527, -102778}, {-1028428, -204567}, {-1003425, -304386},
    {-968758, -401273}, {-924761, -494295}, {-871859, -582558}, {-810560, -665210}, {-741455, -741455}, {-665210, -810560},
    {-582558, -871859}, {-494295, -924761}, {-401273, -968758}, {-304386, -1003425}, {-204567, -1028428}, {-102778, -1043527},
    {0, -1048576}, {102778, -1043527}, {204567, -1028428}, {304386, -1003425}, {401273, -968758}, {494295, -924761},
    {582558, -871859}, {665210, -810560}, {741455, -741455}, {810560, -665210}, {871859, -582558}, {924761, -494295},
    {968758, -401273}, {1003425, -304386}, {1028428, -204567}, {1043527, -102778},
};

}  // namespace windiso::detail
