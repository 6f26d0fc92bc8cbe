from fractions import Fraction as F


DEFAULT_ORDER = 40
DEFAULT_DIGITS = 40
DEFAULT_DEGREE_CAP = 400
SERIES_FALLBACK_ORDER = 60
PARAMETRIC_ORDER_CAP = 40
DIGITS_CAP = 2000
GUARD_DIGITS = 10

SUITE_NAMES = {'rotabaxter': 'Covariance equation, flows and generators',
               'isogenies': 'Rational isogeny catalog',
               'conjugation': 'Conjugation triple P, Q, F',
               'padehunt': 'Pade reconstruction and singularities',
               'modular': 'Modular curve and Hauptmodul identities',
               'lattice': 'Ising decimation maps and chi2 reduction',
               'hypergeom': 'Gauss hypergeometric identity corpus',
               }

SUITES = list(SUITE_NAMES.keys())

SYSTEM_PRESETS = ['main', 'sixth', 'third', 'arctanh', 'genus2', 'N7', 'N11']

# z_s as printed, 43 significant digits
ZS_PRINTED = '-11.817045008077115768316337283432582087420697'

# Printed series coefficients, index = power of z
P_PRINTED = [0, 1, F(-2, 5), F(7, 75), F(-82, 4875), F(1078, 414375), F(-452, 1243125),
             F(57311, 1212046875), F(-1023946, 175746796875)]

Q_PRINTED = [0, 1, F(2, 5), F(17, 75), F(244, 1625), F(45043, 414375), F(2302, 27625),
             F(128941, 1939275), F(15365176, 281194875)]

F_PRINTED = [0, 1, F(-2, 5), F(-2, 15), F(-14, 195), F(-154, 3315), F(-22, 663),
             F(-418, 16575), F(-9614, 480675), F(-2622, 160225)]

G_PRINTED = [0, 1, F(-7, 5), F(4, 15), F(4, 65), F(28, 1105), F(44, 3315), F(44, 5525),
             F(836, 160225), F(1748, 480675)]

DELTA_PRINTED = [1, F(2, 5), F(22, 75), F(394, 1625), F(262634, 1243125)]

R_MINUS_QUARTER_PRINTED = [0, F(-1, 4), F(-1, 8), F(-5, 64), F(-7, 128), F(-21, 512)]

S_SIXTEENTH_PRINTED = [0, F(1, 16), F(3, 128), F(53, 4096), F(277, 32768), F(3181, 524288)]

ETA_HALF_PRINTED = [1, 1, F(1, 2), F(7, 40), F(1, 20), F(121, 9600), F(7, 2400),
                    F(211, 332800), F(41, 312000)]

F_N11_PRINTED = [0, 1, F(-2, 17), F(-15, 238), F(-5, 119), F(-37, 1190), F(-888, 36295),
                 F(-2183, 108885), F(-4366, 258213), F(-58941, 4045337), F(-1807524, 141586795),
                 F(-46543743, 4106017055), F(-5305986702, 521464165985)]

F_ARCTANH_PRINTED = [0, 1, F(-2, 3), F(-2, 15), F(-2, 35), F(-2, 63), F(-2, 99), F(-2, 143)]

R_TIERS_PRINTED = [0, -8, -36, -126, -387]

T_MISSPRINT_PRINTED = [0, -27, -378, -3888, -34074, -271620, -2032209]

# D-polynomials of the large catalog entries, coefficients low degree first
D_81 = [1, 6, -3]

D_2401 = [1, 196, -1302, 14756, -15673, -42168, 111916, -82264, 35231, -19852,
          2954, 308, -7]

D_14641 = [1, 1210, -33033, 2923492, 5093605, -385382514, 3974726283, -14323974808,
           57392757037, -291359180310, 948497199067, -1642552094436, 1084042069649,
           1890240552750, -6610669151537, 9712525647792, -8608181312269, 5384207244702,
           -3223489742187, 2175830922716, -1197743580033, 387221579866, -50897017743,
           -7864445336, 5391243935, -815789634, 28366041, -5092956, 207691, 2794, -11]

D_28561_SEXTIC = [1, -22, 235, -228, 39, 26, 13]

D_28561_D36 = [1, 2388, -61098, 19225300, 606593049, -1543922656, 7856476560,
               -221753896032, 1621753072244, -4542779886736, 2731418674664,
               36717669656304, -200879613202428, 547249607666784, -934179604482832,
               1235038888776160, -1788854212778642, 3018407750933816, -4349780716415868,
               4419228090228152, -2899766501472914, 931940880451552, 413258559018224,
               -857795672629664, 659989056851972, -304241349909008, 87636987790824,
               -14593362219920, 1073204980340, 45138167200, -23660433008, 2028597792,
               -29540327, 3238420, -73386, -492, 1]

# Printed poles of P in units of z_s, as (re, im) pairs
SINGULARITIES_IN_ZS = [(1, 0), (81, 0), (161, 240), (161, -240), (-7, 24), (-7, -24),
                       (-119, 120), (-119, -120), (625, 0), (41, 840), (41, -840),
                       (-527, 336), (-527, -336), (-1519, 720), (-1519, -720), (2401, 0),
                       (1241, 2520), (1241, -2520), (-567, 1944), (-567, -1944),
                       (-3479, 1320), (-3479, -1320)]

# R_625 = T o T*, its D-polynomial as printed in two factors
D_625_FACTORS = ([1, -2, 5], [1, 52, -26, -12, 1])
