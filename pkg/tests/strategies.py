from hypothesis import strategies as st

from threejug.core import Quadruple


@st.composite
def quadruples(draw, max_a=20):
    a = draw(st.integers(3, max_a))
    b = draw(st.integers(2, a - 1))
    c = draw(st.integers(1, b - 1))
    k = draw(st.integers(1, b))
    return Quadruple(a, b, c, 2 * k)
