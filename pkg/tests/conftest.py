import pytest
from hypothesis import settings, strategies as st

from rtmaps.forest import LEAF, Forest, enumerate_forests, ladder, parse_tree
from rtmaps.words import Poly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def forests(min_degree=0, max_degree=4):
    return st.integers(min_degree, max_degree).flatmap(lambda n: st.sampled_from(enumerate_forests(n)))


words = st.text(alphabet="xy", max_size=6)
h1_words = st.one_of(st.just(""), st.text(alphabet="xy", max_size=4).map(lambda w: w + "y"))
polys = st.dictionaries(words, st.integers(-4, 4), max_size=4).map(Poly)
h1_polys = st.dictionaries(h1_words, st.integers(-4, 4), max_size=3).map(Poly)

raw_trees = st.recursive(st.just([]), lambda kids: st.lists(kids, min_size=1, max_size=3), max_leaves=8)


@pytest.fixture
def dot():
    return Forest((LEAF,))


@pytest.fixture
def two_dots():
    return Forest((LEAF, LEAF))


@pytest.fixture
def ladder2():
    return Forest((ladder(2),))


@pytest.fixture
def cherry():
    return Forest((parse_tree("[[][]]"),))


def dense_rank(vectors) -> int:
    """Rank over Q of a list of Poly (or dict) vectors, by plain Gaussian elimination."""
    from fractions import Fraction

    rows = [{k: Fraction(v) for k, v in dict(getattr(p, "terms", p)).items() if v} for p in vectors]
    rank = 0
    cols = sorted({k for r in rows for k in r})
    for col in cols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i].get(col)), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            c = rows[i].get(col)
            if c:
                factor = c / prow[col]
                for k, v in prow.items():
                    rows[i][k] = rows[i].get(k, 0) - factor * v
                rows[i] = {k: v for k, v in rows[i].items() if v}
        rank += 1
    return rank
