"""Frozen series tables for the half-plane kernels.

Generated by tools/gen_series_tables.py; do not edit by hand.
Coefficients are exact rationals rounded once to double precision.
"""

P3_COEFFS = (
    1.5,
    0.25,
    -0.09375,
    0.046875,
    -0.02734375,
    0.017578125,
    -0.0120849609375,
    0.00872802734375,
    -0.0065460205078125,
    0.00505828857421875,
    -0.004004478454589844,
    0.003234386444091797,
    -0.0026568174362182617,
    0.0022140145301818848,
    -0.0018680747598409653,
    0.0015933578833937645,
    -0.0013720581773668528,
    0.001191524206660688,
    -0.001042583680828102,
    0.0009184665759676136,
    -0.0008140953741531121,
    0.0007256067465277738,
    -0.0006500227104311307,
    0.0005850204393880176,
    -0.0005287684740622467,
    0.0004798084301675942,
)

P5_COEFFS = (
    -1.5,
    1.75,
    0.15625,
    -0.046875,
    0.01953125,
    -0.009765625,
    0.0054931640625,
    -0.00335693359375,
    0.0021820068359375,
    -0.00148773193359375,
    0.0010538101196289062,
    -0.0007700920104980469,
    0.0005775690078735352,
    -0.00044280290603637695,
    0.0003459397703409195,
    -0.0002747168764472008,
    0.00022129970602691174,
    -0.00018053397070616484,
    0.000148940525832586,
    -0.00012411710486048833,
    0.00010437120181450155,
    -8.848862762533827e-05,
    7.55840360966431e-05,
    -6.500227104311307e-05,
    5.6251965325770925e-05,
    -4.896004389465247e-05,
)

P5Z_COEFFS = (
    1.5,
    -1.25,
    0.15625,
    -0.046875,
    0.01953125,
    -0.009765625,
    0.0054931640625,
    -0.00335693359375,
    0.0021820068359375,
    -0.00148773193359375,
    0.0010538101196289062,
    -0.0007700920104980469,
    0.0005775690078735352,
    -0.00044280290603637695,
    0.0003459397703409195,
    -0.0002747168764472008,
    0.00022129970602691174,
    -0.00018053397070616484,
    0.000148940525832586,
    -0.00012411710486048833,
    0.00010437120181450155,
    -8.848862762533827e-05,
    7.55840360966431e-05,
    -6.500227104311307e-05,
    5.6251965325770925e-05,
    -4.896004389465247e-05,
)

CORNER_RHO = (
    (0, 3, 1.5),
    (0, 4, 0.5),
    (0, 5, 0.28125),
    (0, 6, 0.1875),
    (0, 7, 0.13671875),
    (0, 8, 0.10546875),
    (0, 9, 0.0845947265625),
    (0, 10, 0.06982421875),
    (0, 11, 0.0589141845703125),
    (0, 12, 0.0505828857421875),
    (1, 2, 4.5),
    (1, 3, 1.75),
    (1, 4, 0.71875),
    (1, 5, 0.421875),
    (1, 6, 0.28515625),
    (1, 7, 0.208984375),
    (1, 8, 0.1614990234375),
    (1, 9, 0.12957763671875),
    (1, 10, 0.1069183349609375),
    (1, 11, 0.09015655517578125),
    (2, 1, 4.5),
    (2, 2, 2.25),
    (2, 3, 0.375),
    (2, 4, 0.140625),
    (2, 5, 0.0703125),
    (2, 6, 0.041015625),
    (2, 7, 0.0263671875),
    (2, 8, 0.01812744140625),
    (2, 9, 0.013092041015625),
    (2, 10, 0.00981903076171875),
    (3, 0, 1.5),
    (3, 1, 1.25),
    (3, 2, -0.375),
    (3, 3, -0.1875),
    (3, 4, -0.1171875),
    (3, 5, -0.08203125),
    (3, 6, -0.0615234375),
    (3, 7, -0.04833984375),
    (3, 8, -0.039276123046875),
    (3, 9, -0.0327301025390625),
    (4, 0, 0.25),
    (4, 1, -0.40625),
    (5, 0, -0.09375),
    (5, 1, 0.140625),
    (6, 0, 0.046875),
    (6, 1, -0.06640625),
    (7, 0, -0.02734375),
    (7, 1, 0.037109375),
    (8, 0, 0.017578125),
    (8, 1, -0.0230712890625),
    (9, 0, -0.0120849609375),
    (9, 1, 0.01544189453125),
    (10, 0, 0.00872802734375),
    (10, 1, -0.0109100341796875),
    (11, 0, -0.0065460205078125),
    (11, 1, 0.00803375244140625),
    (12, 0, 0.00505828857421875),
)

CORNER_PHI = (
    (0, 3, 1.5),
    (0, 4, 0.5),
    (0, 5, 0.28125),
    (0, 6, 0.1875),
    (0, 7, 0.13671875),
    (0, 8, 0.10546875),
    (0, 9, 0.0845947265625),
    (0, 10, 0.06982421875),
    (0, 11, 0.0589141845703125),
    (0, 12, 0.0505828857421875),
    (1, 2, 4.5),
    (1, 3, -0.25),
    (1, 4, 0.15625),
    (1, 5, 0.140625),
    (1, 6, 0.11328125),
    (1, 7, 0.091796875),
    (1, 8, 0.0758056640625),
    (1, 9, 0.06378173828125),
    (1, 10, 0.0545501708984375),
    (1, 11, 0.04730987548828125),
    (2, 1, 4.5),
    (2, 2, -3.75),
    (2, 3, -1.375),
    (2, 4, -0.484375),
    (2, 5, -0.2578125),
    (2, 6, -0.162109375),
    (2, 7, -0.1123046875),
    (2, 8, -0.08294677734375),
    (2, 9, -0.064117431640625),
    (2, 10, -0.05127716064453125),
    (3, 0, 1.5),
    (3, 1, -4.75),
    (3, 2, -2.25),
    (3, 3, -0.375),
    (3, 4, -0.140625),
    (3, 5, -0.0703125),
    (3, 6, -0.041015625),
    (3, 7, -0.0263671875),
    (3, 8, -0.01812744140625),
    (3, 9, -0.013092041015625),
    (4, 0, -1.75),
    (4, 1, -1.15625),
    (4, 2, 0.375),
    (4, 3, 0.1875),
    (4, 4, 0.1171875),
    (4, 5, 0.08203125),
    (4, 6, 0.0615234375),
    (4, 7, 0.04833984375),
    (4, 8, 0.039276123046875),
    (5, 0, -0.15625),
    (5, 1, 0.359375),
    (6, 0, 0.046875),
    (6, 1, -0.11328125),
    (7, 0, -0.01953125),
    (7, 1, 0.048828125),
    (8, 0, 0.009765625),
    (8, 1, -0.0250244140625),
    (9, 0, -0.0054931640625),
    (9, 1, 0.01434326171875),
    (10, 0, 0.00335693359375),
    (10, 1, -0.0088958740234375),
    (11, 0, -0.0021820068359375),
    (11, 1, 0.00585174560546875),
    (12, 0, 0.00148773193359375),
)

CORNER_Z = (
    (0, 3, 1.5),
    (0, 4, 0.5),
    (0, 5, 0.28125),
    (0, 6, 0.1875),
    (0, 7, 0.13671875),
    (0, 8, 0.10546875),
    (0, 9, 0.0845947265625),
    (0, 10, 0.06982421875),
    (0, 11, 0.0589141845703125),
    (0, 12, 0.0505828857421875),
    (1, 2, 4.5),
    (1, 3, 0.25),
    (1, 4, 0.21875),
    (1, 5, 0.140625),
    (1, 6, 0.09765625),
    (1, 7, 0.072265625),
    (1, 8, 0.0560302734375),
    (1, 9, 0.04498291015625),
    (1, 10, 0.0370941162109375),
    (1, 11, 0.03124237060546875),
    (2, 1, 4.5),
    (2, 2, -2.25),
    (2, 3, -0.875),
    (2, 4, -0.515625),
    (2, 5, -0.3515625),
    (2, 6, -0.259765625),
    (2, 7, -0.2021484375),
    (2, 8, -0.16314697265625),
    (2, 9, -0.135284423828125),
    (2, 10, -0.11455535888671875),
    (3, 0, 1.5),
    (3, 1, -3.25),
    (3, 2, -1.125),
    (3, 3, -0.5625),
    (3, 4, -0.3515625),
    (3, 5, -0.24609375),
    (3, 6, -0.1845703125),
    (3, 7, -0.14501953125),
    (3, 8, -0.117828369140625),
    (3, 9, -0.0981903076171875),
    (4, 0, -1.25),
    (4, 1, -0.15625),
    (5, 0, 0.15625),
    (5, 1, 0.046875),
    (6, 0, -0.046875),
    (6, 1, -0.01953125),
    (7, 0, 0.01953125),
    (7, 1, 0.009765625),
    (8, 0, -0.009765625),
    (8, 1, -0.0054931640625),
    (9, 0, 0.0054931640625),
    (9, 1, 0.00335693359375),
    (10, 0, -0.00335693359375),
    (10, 1, -0.0021820068359375),
    (11, 0, 0.0021820068359375),
    (11, 1, 0.00148773193359375),
    (12, 0, -0.00148773193359375),
)

NEARPI_RHO = (
    1.6666666666666667,
    0.36666666666666664,
    0.05992063492063492,
    0.008955026455026455,
    0.0012751022126022127,
    0.00017478499968579333,
    2.319519808772454e-05,
    2.9945207726389642e-06,
)

NEARPI_PHI = (
    0.3333333333333333,
    0.23333333333333334,
    0.061507936507936505,
    0.01175925925925926,
    0.0019202441077441077,
    0.0002806122448979592,
    3.9900353847113103e-05,
    5.3313434049409e-06,
)

NEARPI_Z = (
    0.6666666666666666,
    0.2,
    0.04047619047619048,
    0.006904761904761905,
    0.0010651154401154401,
    0.00015344895404419213,
    2.1031850644945883e-05,
    2.7752880591932877e-06,
)
