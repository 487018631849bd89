"""Frozen expected values shared across the test modules.

N3_PSI: the six stationary polynomials for the 3-site ring, general y.
N4_FORMS: prefactor factors and Schubert labels of the 4-site products.
N5_Y0_FORMS: x-monomial exponent plus summands (each a product of single
  Schubert labels, given as digit strings) for every 5-site state at y = 0.
N5_SPECIAL: inverse-descent count, partition sequence and factor labels for
  the 20 product-form states of the 5-site ring.
"""

N3_PSI = {
    (1, 2, 3): "x1 - y1",
    (1, 3, 2): "x1 + x2 - y1 - y2",
    (2, 1, 3): "x1 + x2 - y1 - y2",
    (2, 3, 1): "x1 - y1",
    (3, 1, 2): "x1 - y1",
    (3, 2, 1): "x1 + x2 - y1 - y2",
}

# state -> (list of (i, j) with prefactor (x_i - y_j), double Schubert labels)
N4_FORMS = {
    (1, 2, 3, 4): ([(1, 1), (1, 1), (1, 2), (2, 1)], []),
    (1, 3, 2, 4): ([(1, 1)], [(1, 4, 3, 2)]),
    (1, 3, 4, 2): ([(1, 1), (2, 1)], [(1, 4, 2, 3)]),
    (1, 4, 2, 3): ([(1, 1), (1, 2), (2, 1)], [(1, 2, 4, 3)]),
    (1, 2, 4, 3): ([(1, 2), (1, 1)], [(1, 3, 4, 2)]),
    (1, 4, 3, 2): ([], [(1, 4, 2, 3), (1, 3, 4, 2)]),
}

# state string -> (mu, summands); each summand is a product of labels
N5_Y0_FORMS = {
    "12345": ((6, 3, 1), [[]]),
    "12354": ((5, 2, 0), [["13452"]]),
    "12435": ((4, 1, 0), [["14532"]]),
    "12453": ((4, 1, 1), [["14523"]]),
    "12534": ((5, 2, 1), [["12453"]]),
    "12543": ((3, 0, 0), [["14523", "13452"]]),
    "13245": ((3, 1, 1), [["15423"]]),
    "13254": ((2, 0, 0), [["15423", "13452"]]),
    "13425": ((3, 2, 1), [["15243"]]),
    "13452": ((3, 3, 1), [["15234"]]),
    "13524": ((2, 1, 0), [["164325"], ["25431"]]),
    "13542": ((2, 2, 0), [["15234", "13452"]]),
    "14235": ((4, 2, 0), [["13542"]]),
    "14253": ((4, 2, 1), [["12543"]]),
    "14325": ((1, 0, 0), [["1753246"], ["265314"], ["2743156"],
                          ["356214"], ["364215"], ["365124"]]),
    "14352": ((1, 1, 0), [["15234", "14532"]]),
    "14523": ((4, 3, 1), [["12534"]]),
    "14532": ((1, 1, 1), [["15234", "14523"]]),
    "15234": ((5, 3, 1), [["12354"]]),
    "15243": ((3, 1, 0), [["146325"], ["24531"]]),
    "15324": ((2, 1, 1), [["15432"], ["164235"]]),
    "15342": ((2, 2, 1), [["15234", "12453"]]),
    "15423": ((3, 2, 0), [["12534", "13452"]]),
    "15432": ((0, 0, 0), [["15234", "14523", "13452"]]),
}

# state string -> (k, partition sequence, factor labels)
N5_SPECIAL = {
    "12345": (0, (), []),
    "12354": (1, ((1, 1, 1),), ["13452"]),
    "12435": (1, ((2, 2, 1),), ["14532"]),
    "12453": (1, ((2, 2),), ["14523"]),
    "12534": (1, ((1, 1),), ["12453"]),
    "13245": (1, ((3, 2),), ["15423"]),
    "13425": (1, ((3, 1),), ["15243"]),
    "13452": (1, ((3,),), ["15234"]),
    "14235": (1, ((2, 1, 1),), ["13542"]),
    "14253": (1, ((2, 1),), ["12543"]),
    "14523": (1, ((2,),), ["12534"]),
    "15234": (1, ((1,),), ["12354"]),
    "12543": (2, ((2, 2), (1, 1, 1)), ["14523", "13452"]),
    "13254": (2, ((3, 2), (1, 1, 1)), ["15423", "13452"]),
    "13542": (2, ((3,), (1, 1, 1)), ["15234", "13452"]),
    "14352": (2, ((3,), (2, 2, 1)), ["15234", "14532"]),
    "14532": (2, ((3,), (2, 2)), ["15234", "14523"]),
    "15342": (2, ((3,), (1, 1)), ["15234", "12453"]),
    "15423": (2, ((2,), (1, 1, 1)), ["12534", "13452"]),
    "15432": (3, ((3,), (2, 2), (1, 1, 1)), ["15234", "14523", "13452"]),
}

EVIL_COUNTS = (1, 2, 6, 20, 68, 232, 792, 2704)


def parse_label(label: str) -> tuple:
    return tuple(int(ch) for ch in label)
