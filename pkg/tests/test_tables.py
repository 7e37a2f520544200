import numpy as np
import pytest

from hexaweb import parabolas, tables

HEADER = "# hexaweb coefficient tables, format version 1\n"


def test_parse_minimal_table():
    t = tables.parse(HEADER + "foo x 1 0 0 3/2 1 0\nfoo x 0 0 0 -1 0 1\n")
    assert len(t[("foo", "x")]) == 2
    assert t[("foo", "x")][0].coeff == tables.Fraction(3, 2)


@pytest.mark.parametrize(
    "text",
    [
        "foo x 1 0 0 1 0 0\n",  # no header
        "# format version 2\nfoo x 1 0 0 1 0 0\n",
        HEADER + "foo x 1 0 0 1 0\n",  # missing field
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        tables.parse(text)


def test_shipped_tables_load():
    objs = tables.objects()
    assert len(objs) >= 5
    with pytest.raises(KeyError):
        tables.evaluate("no_such_object", "x", 5, 3, 4, 12)


def test_quadratic_is_symmetric():
    obj = tables.objects()[0]
    for o in tables.objects():
        if (o, "xx") in tables.load():
            obj = o
            break
    m = tables.quadratic(obj, 5, 3, 4, 12)
    np.testing.assert_array_equal(m, m.T)


def test_evaluation_uses_only_the_sign_of_S():
    obj = next(o for o, t in tables.load() if t == "x")
    a, b, c = 5.0, 3.0, 4.0
    v1 = tables.triple(obj, a, b, c, 12.0)
    v2 = tables.triple(obj, a, b, c, 11.9)  # a sloppy S with the right sign
    np.testing.assert_array_equal(v1, v2)


def test_table_focus_matches_focal_triple():
    f = parabolas.focal_triple(5, 3, 4)
    np.testing.assert_allclose(np.linalg.norm(f.fa - f.fb), f.s, rtol=1e-12)
