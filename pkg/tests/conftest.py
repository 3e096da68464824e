from hypothesis import strategies as st

from glsdim.weights import SuperWeight


@st.composite
def dominant_weights(draw, max_m=4, max_n=None, lo=-3, hi=3, min_n=0):
    m = draw(st.integers(1, max_m))
    top_n = m if max_n is None else min(m, max_n)
    n = draw(st.integers(min(min_n, top_n), top_n))
    eps = sorted(draw(st.lists(st.integers(lo, hi), min_size=m, max_size=m)), reverse=True)
    delta = sorted(draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n)))
    return SuperWeight(tuple(eps), tuple(delta))
