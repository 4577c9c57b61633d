// Frozen G.711 companding oracle data. Generated by tools/gen_oracles.py;
// do not edit by hand. Decode tables are the standard expansion values
// (both mu-law zero codes decode to 0 here). Boundary pairs sample every
// encoder code transition.

pub static MU_DECODE_ORACLE: [i16; 256] = [
    -32124, -31100, -30076, -29052, -28028, -27004, -25980, -24956, -23932, -22908, -21884, -20860, -19836, -18812, -17788, -16764,
    -15996, -15484, -14972, -14460, -13948, -13436, -12924, -12412, -11900, -11388, -10876, -10364, -9852, -9340, -8828, -8316,
    -7932, -7676, -7420, -7164, -6908, -6652, -6396, -6140, -5884, -5628, -5372, -5116, -4860, -4604, -4348, -4092,
    -3900, -3772, -3644, -3516, -3388, -3260, -3132, -3004, -2876, -2748, -2620, -2492, -2364, -2236, -2108, -1980,
    -1884, -1820, -1756, -1692, -1628, -1564, -1500, -1436, -1372, -1308, -1244, -1180, -1116, -1052, -988, -924,
    -876, -844, -812, -780, -748, -716, -684, -652, -620, -588, -556, -524, -492, -460, -428, -396,
    -372, -356, -340, -324, -308, -292, -276, -260, -244, -228, -212, -196, -180, -164, -148, -132,
    -120, -112, -104, -96, -88, -80, -72, -64, -56, -48, -40, -32, -24, -16, -8, 0,
    32124, 31100, 30076, 29052, 28028, 27004, 25980, 24956, 23932, 22908, 21884, 20860, 19836, 18812, 17788, 16764,
    15996, 15484, 14972, 14460, 13948, 13436, 12924, 12412, 11900, 11388, 10876, 10364, 9852, 9340, 8828, 8316,
    7932, 7676, 7420, 7164, 6908, 6652, 6396, 6140, 5884, 5628, 5372, 5116, 4860, 4604, 4348, 4092,
    3900, 3772, 3644, 3516, 3388, 3260, 3132, 3004, 2876, 2748, 2620, 2492, 2364, 2236, 2108, 1980,
    1884, 1820, 1756, 1692, 1628, 1564, 1500, 1436, 1372, 1308, 1244, 1180, 1116, 1052, 988, 924,
    876, 844, 812, 780, 748, 716, 684, 652, 620, 588, 556, 524, 492, 460, 428, 396,
    372, 356, 340, 324, 308, 292, 276, 260, 244, 228, 212, 196, 180, 164, 148, 132,
    120, 112, 104, 96, 88, 80, 72, 64, 56, 48, 40, 32, 24, 16, 8, 0,
];

pub static A_DECODE_ORACLE: [i16; 256] = [
    -5504, -5248, -6016, -5760, -4480, -4224, -4992, -4736, -7552, -7296, -8064, -7808, -6528, -6272, -7040, -6784,
    -2752, -2624, -3008, -2880, -2240, -2112, -2496, -2368, -3776, -3648, -4032, -3904, -3264, -3136, -3520, -3392,
    -22016, -20992, -24064, -23040, -17920, -16896, -19968, -18944, -30208, -29184, -32256, -31232, -26112, -25088, -28160, -27136,
    -11008, -10496, -12032, -11520, -8960, -8448, -9984, -9472, -15104, -14592, -16128, -15616, -13056, -12544, -14080, -13568,
    -344, -328, -376, -360, -280, -264, -312, -296, -472, -456, -504, -488, -408, -392, -440, -424,
    -88, -72, -120, -104, -24, -8, -56, -40, -216, -200, -248, -232, -152, -136, -184, -168,
    -1376, -1312, -1504, -1440, -1120, -1056, -1248, -1184, -1888, -1824, -2016, -1952, -1632, -1568, -1760, -1696,
    -688, -656, -752, -720, -560, -528, -624, -592, -944, -912, -1008, -976, -816, -784, -880, -848,
    5504, 5248, 6016, 5760, 4480, 4224, 4992, 4736, 7552, 7296, 8064, 7808, 6528, 6272, 7040, 6784,
    2752, 2624, 3008, 2880, 2240, 2112, 2496, 2368, 3776, 3648, 4032, 3904, 3264, 3136, 3520, 3392,
    22016, 20992, 24064, 23040, 17920, 16896, 19968, 18944, 30208, 29184, 32256, 31232, 26112, 25088, 28160, 27136,
    11008, 10496, 12032, 11520, 8960, 8448, 9984, 9472, 15104, 14592, 16128, 15616, 13056, 12544, 14080, 13568,
    344, 328, 376, 360, 280, 264, 312, 296, 472, 456, 504, 488, 408, 392, 440, 424,
    88, 72, 120, 104, 24, 8, 56, 40, 216, 200, 248, 232, 152, 136, 184, 168,
    1376, 1312, 1504, 1440, 1120, 1056, 1248, 1184, 1888, 1824, 2016, 1952, 1632, 1568, 1760, 1696,
    688, 656, 752, 720, 560, 528, 624, 592, 944, 912, 1008, 976, 816, 784, 880, 848,
];

pub static MU_BOUNDARY_PAIRS: [(i16, u8); 512] = [
    (-32768, 0), (-31613, 0), (-31612, 1), (-30589, 1), (-30588, 2), (-29565, 2), (-29564, 3), (-28541, 3),
    (-28540, 4), (-27517, 4), (-27516, 5), (-26493, 5), (-26492, 6), (-25469, 6), (-25468, 7), (-24445, 7),
    (-24444, 8), (-23421, 8), (-23420, 9), (-22397, 9), (-22396, 10), (-21373, 10), (-21372, 11), (-20349, 11),
    (-20348, 12), (-19325, 12), (-19324, 13), (-18301, 13), (-18300, 14), (-17277, 14), (-17276, 15), (-16253, 15),
    (-16252, 16), (-15741, 16), (-15740, 17), (-15229, 17), (-15228, 18), (-14717, 18), (-14716, 19), (-14205, 19),
    (-14204, 20), (-13693, 20), (-13692, 21), (-13181, 21), (-13180, 22), (-12669, 22), (-12668, 23), (-12157, 23),
    (-12156, 24), (-11645, 24), (-11644, 25), (-11133, 25), (-11132, 26), (-10621, 26), (-10620, 27), (-10109, 27),
    (-10108, 28), (-9597, 28), (-9596, 29), (-9085, 29), (-9084, 30), (-8573, 30), (-8572, 31), (-8061, 31),
    (-8060, 32), (-7805, 32), (-7804, 33), (-7549, 33), (-7548, 34), (-7293, 34), (-7292, 35), (-7037, 35),
    (-7036, 36), (-6781, 36), (-6780, 37), (-6525, 37), (-6524, 38), (-6269, 38), (-6268, 39), (-6013, 39),
    (-6012, 40), (-5757, 40), (-5756, 41), (-5501, 41), (-5500, 42), (-5245, 42), (-5244, 43), (-4989, 43),
    (-4988, 44), (-4733, 44), (-4732, 45), (-4477, 45), (-4476, 46), (-4221, 46), (-4220, 47), (-3965, 47),
    (-3964, 48), (-3837, 48), (-3836, 49), (-3709, 49), (-3708, 50), (-3581, 50), (-3580, 51), (-3453, 51),
    (-3452, 52), (-3325, 52), (-3324, 53), (-3197, 53), (-3196, 54), (-3069, 54), (-3068, 55), (-2941, 55),
    (-2940, 56), (-2813, 56), (-2812, 57), (-2685, 57), (-2684, 58), (-2557, 58), (-2556, 59), (-2429, 59),
    (-2428, 60), (-2301, 60), (-2300, 61), (-2173, 61), (-2172, 62), (-2045, 62), (-2044, 63), (-1917, 63),
    (-1916, 64), (-1853, 64), (-1852, 65), (-1789, 65), (-1788, 66), (-1725, 66), (-1724, 67), (-1661, 67),
    (-1660, 68), (-1597, 68), (-1596, 69), (-1533, 69), (-1532, 70), (-1469, 70), (-1468, 71), (-1405, 71),
    (-1404, 72), (-1341, 72), (-1340, 73), (-1277, 73), (-1276, 74), (-1213, 74), (-1212, 75), (-1149, 75),
    (-1148, 76), (-1085, 76), (-1084, 77), (-1021, 77), (-1020, 78), (-957, 78), (-956, 79), (-893, 79),
    (-892, 80), (-861, 80), (-860, 81), (-829, 81), (-828, 82), (-797, 82), (-796, 83), (-765, 83),
    (-764, 84), (-733, 84), (-732, 85), (-701, 85), (-700, 86), (-669, 86), (-668, 87), (-637, 87),
    (-636, 88), (-605, 88), (-604, 89), (-573, 89), (-572, 90), (-541, 90), (-540, 91), (-509, 91),
    (-508, 92), (-477, 92), (-476, 93), (-445, 93), (-444, 94), (-413, 94), (-412, 95), (-381, 95),
    (-380, 96), (-365, 96), (-364, 97), (-349, 97), (-348, 98), (-333, 98), (-332, 99), (-317, 99),
    (-316, 100), (-301, 100), (-300, 101), (-285, 101), (-284, 102), (-269, 102), (-268, 103), (-253, 103),
    (-252, 104), (-237, 104), (-236, 105), (-221, 105), (-220, 106), (-205, 106), (-204, 107), (-189, 107),
    (-188, 108), (-173, 108), (-172, 109), (-157, 109), (-156, 110), (-141, 110), (-140, 111), (-125, 111),
    (-124, 112), (-117, 112), (-116, 113), (-109, 113), (-108, 114), (-101, 114), (-100, 115), (-93, 115),
    (-92, 116), (-85, 116), (-84, 117), (-77, 117), (-76, 118), (-69, 118), (-68, 119), (-61, 119),
    (-60, 120), (-53, 120), (-52, 121), (-45, 121), (-44, 122), (-37, 122), (-36, 123), (-29, 123),
    (-28, 124), (-21, 124), (-20, 125), (-13, 125), (-12, 126), (-5, 126), (-4, 127), (-1, 127),
    (0, 255), (3, 255), (4, 254), (11, 254), (12, 253), (19, 253), (20, 252), (27, 252),
    (28, 251), (35, 251), (36, 250), (43, 250), (44, 249), (51, 249), (52, 248), (59, 248),
    (60, 247), (67, 247), (68, 246), (75, 246), (76, 245), (83, 245), (84, 244), (91, 244),
    (92, 243), (99, 243), (100, 242), (107, 242), (108, 241), (115, 241), (116, 240), (123, 240),
    (124, 239), (139, 239), (140, 238), (155, 238), (156, 237), (171, 237), (172, 236), (187, 236),
    (188, 235), (203, 235), (204, 234), (219, 234), (220, 233), (235, 233), (236, 232), (251, 232),
    (252, 231), (267, 231), (268, 230), (283, 230), (284, 229), (299, 229), (300, 228), (315, 228),
    (316, 227), (331, 227), (332, 226), (347, 226), (348, 225), (363, 225), (364, 224), (379, 224),
    (380, 223), (411, 223), (412, 222), (443, 222), (444, 221), (475, 221), (476, 220), (507, 220),
    (508, 219), (539, 219), (540, 218), (571, 218), (572, 217), (603, 217), (604, 216), (635, 216),
    (636, 215), (667, 215), (668, 214), (699, 214), (700, 213), (731, 213), (732, 212), (763, 212),
    (764, 211), (795, 211), (796, 210), (827, 210), (828, 209), (859, 209), (860, 208), (891, 208),
    (892, 207), (955, 207), (956, 206), (1019, 206), (1020, 205), (1083, 205), (1084, 204), (1147, 204),
    (1148, 203), (1211, 203), (1212, 202), (1275, 202), (1276, 201), (1339, 201), (1340, 200), (1403, 200),
    (1404, 199), (1467, 199), (1468, 198), (1531, 198), (1532, 197), (1595, 197), (1596, 196), (1659, 196),
    (1660, 195), (1723, 195), (1724, 194), (1787, 194), (1788, 193), (1851, 193), (1852, 192), (1915, 192),
    (1916, 191), (2043, 191), (2044, 190), (2171, 190), (2172, 189), (2299, 189), (2300, 188), (2427, 188),
    (2428, 187), (2555, 187), (2556, 186), (2683, 186), (2684, 185), (2811, 185), (2812, 184), (2939, 184),
    (2940, 183), (3067, 183), (3068, 182), (3195, 182), (3196, 181), (3323, 181), (3324, 180), (3451, 180),
    (3452, 179), (3579, 179), (3580, 178), (3707, 178), (3708, 177), (3835, 177), (3836, 176), (3963, 176),
    (3964, 175), (4219, 175), (4220, 174), (4475, 174), (4476, 173), (4731, 173), (4732, 172), (4987, 172),
    (4988, 171), (5243, 171), (5244, 170), (5499, 170), (5500, 169), (5755, 169), (5756, 168), (6011, 168),
    (6012, 167), (6267, 167), (6268, 166), (6523, 166), (6524, 165), (6779, 165), (6780, 164), (7035, 164),
    (7036, 163), (7291, 163), (7292, 162), (7547, 162), (7548, 161), (7803, 161), (7804, 160), (8059, 160),
    (8060, 159), (8571, 159), (8572, 158), (9083, 158), (9084, 157), (9595, 157), (9596, 156), (10107, 156),
    (10108, 155), (10619, 155), (10620, 154), (11131, 154), (11132, 153), (11643, 153), (11644, 152), (12155, 152),
    (12156, 151), (12667, 151), (12668, 150), (13179, 150), (13180, 149), (13691, 149), (13692, 148), (14203, 148),
    (14204, 147), (14715, 147), (14716, 146), (15227, 146), (15228, 145), (15739, 145), (15740, 144), (16251, 144),
    (16252, 143), (17275, 143), (17276, 142), (18299, 142), (18300, 141), (19323, 141), (19324, 140), (20347, 140),
    (20348, 139), (21371, 139), (21372, 138), (22395, 138), (22396, 137), (23419, 137), (23420, 136), (24443, 136),
    (24444, 135), (25467, 135), (25468, 134), (26491, 134), (26492, 133), (27515, 133), (27516, 132), (28539, 132),
    (28540, 131), (29563, 131), (29564, 130), (30587, 130), (30588, 129), (31611, 129), (31612, 128), (32767, 128),
];

pub static A_BOUNDARY_PAIRS: [(i16, u8); 512] = [
    (-32768, 42), (-31745, 42), (-31744, 43), (-30721, 43), (-30720, 40), (-29697, 40), (-29696, 41), (-28673, 41),
    (-28672, 46), (-27649, 46), (-27648, 47), (-26625, 47), (-26624, 44), (-25601, 44), (-25600, 45), (-24577, 45),
    (-24576, 34), (-23553, 34), (-23552, 35), (-22529, 35), (-22528, 32), (-21505, 32), (-21504, 33), (-20481, 33),
    (-20480, 38), (-19457, 38), (-19456, 39), (-18433, 39), (-18432, 36), (-17409, 36), (-17408, 37), (-16385, 37),
    (-16384, 58), (-15873, 58), (-15872, 59), (-15361, 59), (-15360, 56), (-14849, 56), (-14848, 57), (-14337, 57),
    (-14336, 62), (-13825, 62), (-13824, 63), (-13313, 63), (-13312, 60), (-12801, 60), (-12800, 61), (-12289, 61),
    (-12288, 50), (-11777, 50), (-11776, 51), (-11265, 51), (-11264, 48), (-10753, 48), (-10752, 49), (-10241, 49),
    (-10240, 54), (-9729, 54), (-9728, 55), (-9217, 55), (-9216, 52), (-8705, 52), (-8704, 53), (-8193, 53),
    (-8192, 10), (-7937, 10), (-7936, 11), (-7681, 11), (-7680, 8), (-7425, 8), (-7424, 9), (-7169, 9),
    (-7168, 14), (-6913, 14), (-6912, 15), (-6657, 15), (-6656, 12), (-6401, 12), (-6400, 13), (-6145, 13),
    (-6144, 2), (-5889, 2), (-5888, 3), (-5633, 3), (-5632, 0), (-5377, 0), (-5376, 1), (-5121, 1),
    (-5120, 6), (-4865, 6), (-4864, 7), (-4609, 7), (-4608, 4), (-4353, 4), (-4352, 5), (-4097, 5),
    (-4096, 26), (-3969, 26), (-3968, 27), (-3841, 27), (-3840, 24), (-3713, 24), (-3712, 25), (-3585, 25),
    (-3584, 30), (-3457, 30), (-3456, 31), (-3329, 31), (-3328, 28), (-3201, 28), (-3200, 29), (-3073, 29),
    (-3072, 18), (-2945, 18), (-2944, 19), (-2817, 19), (-2816, 16), (-2689, 16), (-2688, 17), (-2561, 17),
    (-2560, 22), (-2433, 22), (-2432, 23), (-2305, 23), (-2304, 20), (-2177, 20), (-2176, 21), (-2049, 21),
    (-2048, 106), (-1985, 106), (-1984, 107), (-1921, 107), (-1920, 104), (-1857, 104), (-1856, 105), (-1793, 105),
    (-1792, 110), (-1729, 110), (-1728, 111), (-1665, 111), (-1664, 108), (-1601, 108), (-1600, 109), (-1537, 109),
    (-1536, 98), (-1473, 98), (-1472, 99), (-1409, 99), (-1408, 96), (-1345, 96), (-1344, 97), (-1281, 97),
    (-1280, 102), (-1217, 102), (-1216, 103), (-1153, 103), (-1152, 100), (-1089, 100), (-1088, 101), (-1025, 101),
    (-1024, 122), (-993, 122), (-992, 123), (-961, 123), (-960, 120), (-929, 120), (-928, 121), (-897, 121),
    (-896, 126), (-865, 126), (-864, 127), (-833, 127), (-832, 124), (-801, 124), (-800, 125), (-769, 125),
    (-768, 114), (-737, 114), (-736, 115), (-705, 115), (-704, 112), (-673, 112), (-672, 113), (-641, 113),
    (-640, 118), (-609, 118), (-608, 119), (-577, 119), (-576, 116), (-545, 116), (-544, 117), (-513, 117),
    (-512, 74), (-497, 74), (-496, 75), (-481, 75), (-480, 72), (-465, 72), (-464, 73), (-449, 73),
    (-448, 78), (-433, 78), (-432, 79), (-417, 79), (-416, 76), (-401, 76), (-400, 77), (-385, 77),
    (-384, 66), (-369, 66), (-368, 67), (-353, 67), (-352, 64), (-337, 64), (-336, 65), (-321, 65),
    (-320, 70), (-305, 70), (-304, 71), (-289, 71), (-288, 68), (-273, 68), (-272, 69), (-257, 69),
    (-256, 90), (-241, 90), (-240, 91), (-225, 91), (-224, 88), (-209, 88), (-208, 89), (-193, 89),
    (-192, 94), (-177, 94), (-176, 95), (-161, 95), (-160, 92), (-145, 92), (-144, 93), (-129, 93),
    (-128, 82), (-113, 82), (-112, 83), (-97, 83), (-96, 80), (-81, 80), (-80, 81), (-65, 81),
    (-64, 86), (-49, 86), (-48, 87), (-33, 87), (-32, 84), (-17, 84), (-16, 85), (-1, 85),
    (0, 213), (15, 213), (16, 212), (31, 212), (32, 215), (47, 215), (48, 214), (63, 214),
    (64, 209), (79, 209), (80, 208), (95, 208), (96, 211), (111, 211), (112, 210), (127, 210),
    (128, 221), (143, 221), (144, 220), (159, 220), (160, 223), (175, 223), (176, 222), (191, 222),
    (192, 217), (207, 217), (208, 216), (223, 216), (224, 219), (239, 219), (240, 218), (255, 218),
    (256, 197), (271, 197), (272, 196), (287, 196), (288, 199), (303, 199), (304, 198), (319, 198),
    (320, 193), (335, 193), (336, 192), (351, 192), (352, 195), (367, 195), (368, 194), (383, 194),
    (384, 205), (399, 205), (400, 204), (415, 204), (416, 207), (431, 207), (432, 206), (447, 206),
    (448, 201), (463, 201), (464, 200), (479, 200), (480, 203), (495, 203), (496, 202), (511, 202),
    (512, 245), (543, 245), (544, 244), (575, 244), (576, 247), (607, 247), (608, 246), (639, 246),
    (640, 241), (671, 241), (672, 240), (703, 240), (704, 243), (735, 243), (736, 242), (767, 242),
    (768, 253), (799, 253), (800, 252), (831, 252), (832, 255), (863, 255), (864, 254), (895, 254),
    (896, 249), (927, 249), (928, 248), (959, 248), (960, 251), (991, 251), (992, 250), (1023, 250),
    (1024, 229), (1087, 229), (1088, 228), (1151, 228), (1152, 231), (1215, 231), (1216, 230), (1279, 230),
    (1280, 225), (1343, 225), (1344, 224), (1407, 224), (1408, 227), (1471, 227), (1472, 226), (1535, 226),
    (1536, 237), (1599, 237), (1600, 236), (1663, 236), (1664, 239), (1727, 239), (1728, 238), (1791, 238),
    (1792, 233), (1855, 233), (1856, 232), (1919, 232), (1920, 235), (1983, 235), (1984, 234), (2047, 234),
    (2048, 149), (2175, 149), (2176, 148), (2303, 148), (2304, 151), (2431, 151), (2432, 150), (2559, 150),
    (2560, 145), (2687, 145), (2688, 144), (2815, 144), (2816, 147), (2943, 147), (2944, 146), (3071, 146),
    (3072, 157), (3199, 157), (3200, 156), (3327, 156), (3328, 159), (3455, 159), (3456, 158), (3583, 158),
    (3584, 153), (3711, 153), (3712, 152), (3839, 152), (3840, 155), (3967, 155), (3968, 154), (4095, 154),
    (4096, 133), (4351, 133), (4352, 132), (4607, 132), (4608, 135), (4863, 135), (4864, 134), (5119, 134),
    (5120, 129), (5375, 129), (5376, 128), (5631, 128), (5632, 131), (5887, 131), (5888, 130), (6143, 130),
    (6144, 141), (6399, 141), (6400, 140), (6655, 140), (6656, 143), (6911, 143), (6912, 142), (7167, 142),
    (7168, 137), (7423, 137), (7424, 136), (7679, 136), (7680, 139), (7935, 139), (7936, 138), (8191, 138),
    (8192, 181), (8703, 181), (8704, 180), (9215, 180), (9216, 183), (9727, 183), (9728, 182), (10239, 182),
    (10240, 177), (10751, 177), (10752, 176), (11263, 176), (11264, 179), (11775, 179), (11776, 178), (12287, 178),
    (12288, 189), (12799, 189), (12800, 188), (13311, 188), (13312, 191), (13823, 191), (13824, 190), (14335, 190),
    (14336, 185), (14847, 185), (14848, 184), (15359, 184), (15360, 187), (15871, 187), (15872, 186), (16383, 186),
    (16384, 165), (17407, 165), (17408, 164), (18431, 164), (18432, 167), (19455, 167), (19456, 166), (20479, 166),
    (20480, 161), (21503, 161), (21504, 160), (22527, 160), (22528, 163), (23551, 163), (23552, 162), (24575, 162),
    (24576, 173), (25599, 173), (25600, 172), (26623, 172), (26624, 175), (27647, 175), (27648, 174), (28671, 174),
    (28672, 169), (29695, 169), (29696, 168), (30719, 168), (30720, 171), (31743, 171), (31744, 170), (32767, 170),
];
