import pytest

import parmon as P

EX2_TEXT = """\
elements: 1 x y z
identity: 1
x y = x
y y = y
y z = z
"""

GROUP2_TEXT = """\
elements: 1 g
identity: 1
g g = 1
"""

TRIVIAL_TEXT = """\
elements: 1
identity: 1
"""


@pytest.fixture(scope="session")
def ex2():
    return P.parse_monoid(EX2_TEXT)


@pytest.fixture(scope="session")
def letters3():
    return P.gen_no_common_letters_monoid("abc")


@pytest.fixture(scope="session")
def group2():
    return P.parse_monoid(GROUP2_TEXT)


@pytest.fixture(scope="session")
def trivial():
    return P.parse_monoid(TRIVIAL_TEXT)


@pytest.fixture(scope="session")
def du2():
    return P.gen_disjoint_union_monoid(2)


def wrd(m, text):
    return P.parse_word(m, text)


def fmt(m, w):
    return P.format_word(m, w)
