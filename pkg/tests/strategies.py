from hypothesis import strategies as st

from services.symbol_service import Bipartition, Partition, Symbol


@st.composite
def rows(draw, length, largest=14):
    values = draw(st.lists(st.integers(min_value=1, max_value=largest), min_size=length, max_size=length, unique=True))
    return tuple(sorted(values))


@st.composite
def symbols(draw, max_k=4, max_r=3, r=None):
    k = draw(st.integers(min_value=0, max_value=max_k))
    if r is None:
        r = draw(st.integers(min_value=0, max_value=max_r))
    return Symbol(draw(rows(k + r)), draw(rows(k)))


@st.composite
def partitions(draw, max_parts=4, max_part=4):
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_parts))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def bipartitions(draw):
    return Bipartition(draw(partitions()), draw(partitions()))
