"""Reference energy tables and the basis parameters that reproduce them.

Values are binding energies (-E, atomic units) embedded verbatim from the
published reference data, including its lower-precision cells.  Each table
carries the basis-scale choices used to regenerate it; for the weakly
screened or weakly bound parameter sets the scale has to sit inside the
stability plateau of the level being computed, so a few entries carry
per-level scales.
"""

# Cosine-like screened Coulomb, strength 1, ell = 0, N = 100.
# screening delta -> binding energies of the bound levels, deepest first.
TABLE1 = {
    0.01: [1.9900001243765, 0.2122269805218, 0.07003239211313, 0.03093144647664,
           0.0149826725629, 0.0071278983166, 0.0029082843879, 0.0006477201],
    0.08: [1.9200614950617, 0.1442942629202, 0.0118175986105],
    0.1: [1.9001189204077, 0.1261021700846, 0.00187488962075],
    0.2: [1.8009057424238, 0.048234960913],
    0.5: [1.5123062833952],
    1.0: [1.08022847887960],
    2.0: [0.458673666401],
    5.0: [0.0087175321],
    9.0: [8.6595e-6],
}
TABLE1_N = 100
TABLE1_LAM = 1.0
# absolute tolerance per row: full digits where the reference prints them,
# looser where it prints only a few significant figures
TABLE1_TOL = {0.01: 1e-9, 0.08: 1e-9, 0.1: 1e-9, 0.2: 1e-9, 0.5: 1e-9,
              1.0: 1e-9, 2.0: 1e-9, 5.0: 1e-6, 9.0: 1e-6}

# Kratzer potential, coulomb strength 1, N = 100.
# (B, ell) -> binding energies of the five lowest levels (exact values).
TABLE2 = {
    (50.0, 1): [0.008562900642375, 0.006695745370544, 0.005378822847548,
                0.004415400957402, 0.003689414577626],
    (50.0, 2): [0.008117084827976, 0.006386070585535, 0.005155045938050,
                0.004248475141182, 0.003561603048495],
    (50.0, 5): [0.005958747303690, 0.004843517472534, 0.004014411087421,
                0.003381307818617, 0.002886964601972],
    (5.0, 1): [0.057474635269819, 0.032054427436461, 0.020410288672876,
               0.014125719046627, 0.010352951221794],
    (5.0, 2): [0.040816326530612, 0.024691358024691, 0.016528925619834,
               0.011834319526627, 0.008888888888888],
    (5.0, 5): [0.013994929411735, 0.010270804820936, 0.007857171966530,
               0.006204199126583, 0.005022852463037],
    (1.0, 1): [0.136454928592147, 0.058874503045718, 0.032634801055626,
               0.020704366750212, 0.014294731377207],
    (1.0, 2): [0.066790737340724, 0.035821227603347, 0.022291236000336,
               0.015196424803818, 0.011019378022041],
    (1.0, 5): [0.015949462144524, 0.011481831764407, 0.008658743703939,
               0.006761952806216, 0.005426455616861],
    (0.1, 1): [0.208436783273251, 0.076965389599071, 0.039701305667814,
               0.024164322881252, 0.016239418588263],
    (0.1, 2): [0.078433271272334, 0.040242948225715, 0.024420944763840,
               0.016380596093781, 0.011744364350880],
    (0.1, 5): [0.016469043621932, 0.011798026267925, 0.008865256070540,
               0.006904176778903, 0.005528532691013],
}
TABLE2_N = 100
# basis scale per (B, ell); the shallow small-B, ell=1 wells need a scale
# tuned per level (deeper levels want a shorter-range basis)
TABLE2_LAM = {
    (50.0, 1): 0.6, (50.0, 2): 0.6, (50.0, 5): 0.5,
    (5.0, 1): 1.2, (5.0, 2): 0.3, (5.0, 5): 0.4,
    (1.0, 1): [8.0, 6.6, 4.5, 3.2, 2.5], (1.0, 2): 1.8, (1.0, 5): 0.3,
    (0.1, 1): [10.0, 8.0, 5.3, 3.7, 2.8], (0.1, 2): 1.8, (0.1, 5): 0.4,
}
TABLE2_TOL = 1e-9
# reference cells whose matrix-path value drifts from the exact formula in
# the published data; reported with a flag rather than failed
TABLE2_FLAGGED = {(0.1, 1, 3), (0.1, 1, 4), (0.1, 2, 3), (0.1, 2, 4), (0.1, 5, 3), (0.1, 5, 4)}

# Generalized Morse potential, N = 70, lam = 12.
# rows: (ell, r_eq, width, depth) -> {beta: binding energies}
TABLE3 = [
    ((0, 1.0, 2.0, -10.0), {
        0.8: [241.4455469169, 92.2621055918, 21.147768355290],
        1.0: [216.47559486094, 73.0655914016, 7.617263800989],
        1.2: [191.571748471411, 54.10423557665],
    }),
    ((2, 1.0, 2.0, -10.0), {
        0.8: [73.8752316465212, 11.7565360884],
        1.0: [55.151473935195],
        1.2: [36.687751877201],
    }),
    ((0, 4.0, 1.5, -6.0), {
        0.8: [55.042767263132, 33.964364044587, 20.62526735064,
              11.160124151925, 4.32512276547],
        1.0: [45.203869139509, 25.21574484179, 12.801414587566, 4.23015943520],
        1.2: [35.38643997352, 16.526155682649, 5.087723194206],
    }),
    ((1, 4.0, 1.5, -6.0), {
        0.8: [41.8433860514363, 26.11877926631, 15.1603025679012,
              7.222263081408, 1.53509424176],
        1.0: [32.629596329074, 17.865063073765, 7.80093221213, 0.7682013249054],
        1.2: [23.456123825950, 9.69454254105, 0.58960423692],
    }),
    ((2, 4.0, 1.5, -6.0), {
        0.8: [31.80730946194, 19.317248416896, 10.269437452762, 3.691373989975],
        1.0: [23.136414765140, 11.549044910706, 3.389515557097],
        1.2: [14.526564734920, 3.894631587677],
    }),
]
TABLE3_N = 70
TABLE3_LAM = 12.0
TABLE3_TOL = 1e-8
