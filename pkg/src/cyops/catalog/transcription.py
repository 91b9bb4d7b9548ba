"""Source operators in factored form, one function call per source line.

Linear/quadratic factors are low-to-high coefficient lists, so ``[1, 2]``
is (2 theta + 1).  The ``.cyop`` fixtures in ``data/`` are generated from
this table and checked against it by the test suite.

Corrected transcription errors (each original fails the YY test or the recurrence):

* 35A, z^4 block: ``34 theta^2 + 13 theta + 145`` -> ``34 theta^2 + 136 theta + 145``.
* case D, z^2 block: ``(3 theta + 1)(3 theta + 2)`` -> ``(3 theta + 1)(3 theta + 5)``.
* transformed case A (order 7), z^2 block: ``(theta + 2)`` -> ``(theta + 1)``.
"""

from __future__ import annotations

from .. import poly as P
from ..theta import ThetaOperator, from_theta_coefficients


def _block(scale, *factors):
    return P.scale(P.prod(P.poly(f) for f in factors), scale)


def _op(order, *blocks):
    return from_theta_coefficients(order, list(blocks))


T3 = [0, 0, 0, 1]
T4 = [0, 0, 0, 0, 1]
T5 = [0, 0, 0, 0, 0, 1]
T7 = [0] * 7 + [1]


def _order3(c1, q1, c2, q2, c3, q3, *rest):
    """theta^3 + c1 z (2t+1) q1 + c2 z^2 (t+1) q2 + c3 z^3 (2t+3) q3 + ..."""
    blocks = [T3, _block(c1, [1, 2], q1), _block(c2, [1, 1], q2), _block(c3, [3, 2], q3)]
    lin = {4: [2, 1], 5: [5, 2], 6: [3, 1]}
    k = 4
    for c, q in zip(rest[::2], rest[1::2]):
        blocks.append(_block(c, lin[k], q))
        k += 1
    return _op(3, *blocks)


ORDER3 = {
    "11A": _order3(-2, [2, 5, 5], 8, [8, 14, 7], -22, [2, 3, 1]),
    "14A": _order3(-1, [5, 11, 11], 1, [141, 242, 121], -98, [2, 3, 1]),
    "15A": _order3(-1, [3, 7, 7], 1, [33, 58, 29], -30, [2, 3, 1]),
    "13A": _order3(-1, [1, 4, 4], -1, [61, 92, 46], -4, [21, 24, 8], -3, [35, 36, 9]),
    "17A": _order3(-1, [1, 3, 3], -1, [35, 54, 27], -2, [17, 21, 7], -4, [15, 16, 4]),
    "19A": _order3(-3, [1, 2, 2], 1, [31, 44, 22], 4, [3, 3, 1], -3, [35, 36, 9]),
    "22A": _order3(-2, [1, 2, 2], -4, [1, 2, 1], 2, [22, 27, 9], -8, [15, 16, 4]),
    "35A": _order3(-1, [3, 5, 5], 1, [61, 74, 37], -2, [74, 75, 25], 4, [145, 136, 34],
                   -70, [6, 5, 1]),
    "39A": _order3(-3, [2, 3, 3], 23, [8, 10, 5], -3, [140, 153, 51], 253, [4, 4, 1],
                   6, [56, 45, 9]),
    "23A": _order3(-1, [0, 1, 1], -1, [32, 46, 23], -1, [68, 75, 25], -1, [248, 232, 58],
                   -1, [96, 80, 16], -1, [88, 66, 11]),
    "29A": _order3(-1, [3, 5, 5], 1, [37, 46, 23], -1, [13, 15, 5], -1, [68, 60, 15],
                   2, [33, 25, 5], -4, [35, 24, 4]),
    "31A": _order3(2, [1, 1, 1], -2, [10, 14, 7], -1, [138, 141, 47], -3, [240, 212, 53],
                   -7, [46, 35, 7], -3, [80, 54, 9]),
}


def _degree7(c0, c1, q1, c2, q2, c3, q3, c4, q4, c5, q5, c6, q6, c7):
    return _op(
        3,
        _block(c0, T3),
        _block(c1, [1, 2], q1),
        _block(c2, [1, 1], q2),
        _block(c3, [3, 2], q3),
        _block(c4, [2, 1], q4),
        _block(c5, [5, 2], q5),
        _block(c6, [3, 1], q6),
        _block(c7, [4, 1], [3, 1], [7, 2]),
    )


DEGREE7 = {
    "A70-a": _degree7(8, -4, [5, 7, 7], 2, [97, 112, 56], 1, [71, 24, 8], -10, [245, 176, 44],
                      1, [1729, 1220, 244], 128, [10, 6, 1], -320),
    "A70-b": _degree7(8, 4, [19, 25, 25], 14, [279, 304, 152], 1, [20311, 18840, 6280],
                      2, [110667, 89360, 22340], 1, [336617, 240900, 48180],
                      8, [136865, 88008, 14668], 31360),
    "A70-c": _degree7(8, -4, [11, 15, 15], 2, [653, 728, 364], -1, [3589, 3420, 1140],
                      32, [547, 460, 115], -32, [229, 175, 35], -24, [425, 264, 44], 640),
}


def _order5(c1, q1, c2, q2, c3=None, q3=None):
    blocks = [T5, _block(c1, [1, 2], q1), _block(c2, [1, 1], q2)]
    if c3 is not None:
        blocks.append(_block(c3, [3, 2], q3))
    return _op(5, *blocks)


_Q310 = [10, 39, 49, 24, 4]
_Q25 = [25, 120, 184, 96, 16]

ORDER5 = {
    "AESZ-32": _order5(-3, [4, 27, 72, 90, 45], -3, [8, 34, 53, 36, 9]),
    "AESZ-60": _order5(-2, [4, 23, 54, 62, 31], 12, [120, 526, 839, 576, 144]),
    "AESZ-189": _order5(-2, [6, 40, 105, 130, 65], 16, [45, 216, 364, 256, 64]),
    "AESZ-244": _order5(2, [3, 18, 44, 52, 26], -12, [35, 142, 215, 144, 36]),
    "AESZ-355": _order5(-2, [6, 34, 77, 86, 43], 48, [105, 496, 824, 576, 144]),
    "AESZ-356": _order5(-2, [8, 46, 105, 118, 59], 384, [24, 118, 203, 144, 36]),
    "AESZ-130": _order5(-2, [3, 14, 28, 28, 14], 4, [255, 902, 1235, 784, 196],
                        -1152, [4, 12, 13, 6, 1]),
    "AESZ-188": _order5(-2, [5, 28, 63, 70, 35], 4, [855, 3834, 6061, 4144, 1036],
                        -1800, _Q310),
    "bin2*4'": _order5(-2**5, [-1, 2, 26, 48, 24], -2**12, [291, 1136, 1528, 960, 240],
                       -2**24, _Q310),
    "bin2*5'": _order5(-2**2 * 3**2, [5, 27, 63, 72, 36], 2**4 * 3**6, [165, 656, 904, 576, 144],
                       -2**11 * 3**9, _Q310),
    "bin2*6'": _order5(-2**2, [23, 223, 795, 1144, 572], -2**4, [10863, 42768, 58184, 36800, 9200],
                       -2**14 * 3**2, _Q310),
    "bin2*3.5": _order5(-2**2, [7, 53, 155, 204, 102], 2**4, [933, 4864, 8768, 6336, 1584],
                        -2**7 * 7**2, _Q25),
    "bin2*3.8": _order5(2, [4, 20, 35, 30, 15], -2**7, [159, 820, 1466, 1056, 264],
                        -2**11 * 7**2, _Q25),
    "bin2*3.9": _order5(-2, [8, 60, 173, 226, 113], -2**5, [276, 1450, 2629, 1904, 476],
                        -2**5 * 11**2, _Q25),
    "bin2*3.15": _order5(-2**4, [1, 9, 30, 42, 21], -2**8, [231, 1192, 2132, 1536, 384],
                         -2**12 * 5**2, _Q25),
    "bin2*388": _order5(-2**2, [25, 233, 815, 1164, 582], 2**4, [5721, 29152, 51632, 37056, 9264],
                        -2**7 * 17**2, _Q25),
}

HYP5 = _op(5, T5, _block(-32, *([[1, 2]] * 5)))

ORDER7 = {
    "7-A": _op(7, T7, _block(-128, [1, 2], [1, 2], [1, 2], [3, 12, 20, 16, 8]),
               _block(2**20, [1, 1], [1, 1], [1, 1], [1, 2], [1, 2], [3, 2], [3, 2])),
    "7-B": _op(7, T7, _block(-27, [1, 2], [1, 3], [2, 3], [28, 117, 198, 162, 81]),
               _block(3**12, [1, 1], [1, 3], [2, 3], [2, 3], [4, 3], [4, 3], [5, 3])),
    "7-C": _op(7, T7, _block(-128, [1, 2], [1, 4], [3, 4], [39, 176, 304, 256, 128]),
               _block(2**26, [1, 1], [1, 2], [3, 2], [1, 4], [3, 4], [5, 4], [7, 4])),
    "7-D": _op(7, T7, _block(-2**7 * 3**3, [1, 2], [1, 6], [5, 6], [155, 828, 1476, 1296, 648]),
               _block(2**20 * 3**12, [1, 1], [1, 3], [5, 3], [1, 6], [5, 6], [7, 6], [11, 6])),
}

TRANSFORMED_A = {
    "7-A-order4": _op(4, T4, _block(-16, [1, 4], [7, 28, 40, 32]),
                      _block(2**12, [1, 4], [3, 4], [3, 4], [5, 4])),
    "7-A-wronskian5": _op(5, T5, _block(-32, [1, 2], [21, 76, 124, 96, 48]),
                          _block(2**18, [1, 1], [1, 1], [1, 1], [23, 24, 12]),
                          _block(-2**29, [1, 1], [1, 1], [2, 1], [2, 1], [3, 2])),
    "7-A-transformed": _op(7, T7, _block(-128, [1, 2], [1, 2], [1, 2], [21, 76, 124, 96, 48]),
                           _block(2**22, [1, 1], [1, 2], [1, 2], [3, 2], [3, 2], [23, 24, 12]),
                           _block(-2**35, [1, 2], [1, 2], [3, 2], [3, 2], [3, 2], [5, 2], [5, 2])),
}


def uncorrected_case_d_p2() -> P.Poly:
    """Case D's z^2 block before correction (fails the YY test)."""
    return _block(2**20 * 3**12, [1, 1], [1, 3], [2, 3], [1, 6], [5, 6], [7, 6], [11, 6])


def uncorrected_35a() -> ThetaOperator:
    """35A before correction (fails the YY test)."""
    return _order3(-1, [3, 5, 5], 1, [61, 74, 37], -2, [74, 75, 25], 4, [145, 13, 34],
                   -70, [6, 5, 1])


def uncorrected_transformed_a_p2() -> P.Poly:
    return _block(2**22, [2, 1], [1, 2], [1, 2], [3, 2], [3, 2], [23, 24, 12])


__all__ = ["ORDER3", "DEGREE7", "ORDER5", "ORDER7", "HYP5", "TRANSFORMED_A"]
