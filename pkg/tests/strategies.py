"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from cyops import poly as P
from cyops.theta import ThetaOperator, from_theta_coefficients

small = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def theta_operators(draw, min_order=2, max_order=7, max_degree=3):
    """z^k P_k(theta) with deg P_k <= n; the top theta power is forced nonzero somewhere."""
    n = draw(st.integers(min_order, max_order))
    m = draw(st.integers(0, max_degree))
    rows = [[draw(small) for _ in range(n + 1)] for _ in range(m + 1)]
    if all(r[n] == 0 for r in rows):
        rows[draw(st.integers(0, m))][n] = draw(st.integers(1, 4))
    if not any(rows[m]):
        rows[m][0] = 1
    return from_theta_coefficients(n, rows)


@st.composite
def yy_operators(draw, min_order=2, max_order=7, max_degree=3):
    """YY operators built as P_k(T) = Q_k(T) + (-1)^n Q_k(-T-k)."""
    n = draw(st.integers(min_order, max_order))
    m = draw(st.integers(1, max_degree))
    sign = -1 if n % 2 else 1
    rows = []
    for k in range(m + 1):
        q = P.poly(draw(small) for _ in range(n + 1))
        rows.append(P.add(q, P.scale(P.reflect(q, k), sign)))
    # P_0 = T^n keeps a MUM point at zero
    rows[0] = P.poly([0] * n + [1])
    if not rows[m]:
        top = P.poly([0] * n + [1])
        rows[m] = P.add(top, P.scale(P.reflect(top, m), sign))
    return from_theta_coefficients(n, [list(r) + [0] * (n + 1 - len(r)) for r in rows])


@st.composite
def multiplications(draw, max_degree=3):
    """Order-0 operator for multiplication by a polynomial f(z)."""
    m = draw(st.integers(0, max_degree))
    cs = [draw(small) for _ in range(m)] + [draw(st.integers(1, 5))]
    return ThetaOperator(0, tuple(P.poly([c]) for c in cs))


@st.composite
def series_coeffs(draw, N=12, unit=False):
    cs = [draw(rationals) for _ in range(N)]
    if unit:
        cs[0] = Fraction(1)
    return cs
