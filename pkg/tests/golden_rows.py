"""Frozen header/first/last rows of each default CLI sweep.

Values were cross-checked against a 40-digit mpmath evaluation of the same
closed forms before freezing.
"""

GOLDEN_FIRST_LAST = {
    ("figure", "negativity"): (
        "I,mixed_negativity,pure_negativity,gap",
        "0.500001,124999.749996,0.499998000004,124999.249998",
        "1,0,0,0",
    ),
    ("figure", "fidelity"): (
        "r,I,mixed_fidelity,pure_equivalent_fidelity,gap",
        "0,1,0.5,0.5,0",
        "3,0.501239376088,0.748763688422,0.666116287601,0.082647400821",
    ),
    ("figure", "qkd"): (
        "eta,delta_gaussian,delta_mix,delta_vacuum,delta_squeezed",
        "1e-06,-0.999998954046,-0.580481215812,6.49213060618e-07,-2.32192681089",
        "0.999999,1.66094962062,1.66094962073,1.66095755535,1.6609258169",
    ),
    ("compare", "loss"): (
        "eta,duan_common,greg_negativity,nancy_negativity,cm_max_abs_diff",
        "1e-06,0.999999367879,3.16060479455e-07,8.5914091423e-07,0",
        "0.999999,0.367880073292,0.859138578846,0.859140055089,0",
    ),
}
