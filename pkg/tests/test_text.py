import numpy as np
import pytest

from ttslab.corpus import normalize_text


@pytest.mark.parametrize("raw,expected", [
    ("a; b: c", "a, b, c"),
    ("(hello)", "hello"),
    ("a   b", "a b"),
    ("  leading and trailing  ", "leading and trailing"),
    ("tabs\tand\nnewlines", "tabs and newlines"),
    ("", ""),
    ("a;b:c(d)", "a,b,c" + "d"),
])
def test_normalize_examples(raw, expected):
    assert normalize_text(raw) == expected


def test_no_forbidden_characters_remain():
    rng = np.random.default_rng(7)
    pool = list("abc ;:()\t\n  ,.?!xyz")
    for _ in range(200):
        raw = "".join(rng.choice(pool, size=rng.integers(0, 40)))
        out = normalize_text(raw)
        assert not any(c in out for c in ";:()")
        assert "  " not in out
        assert out == out.strip()


def test_idempotent():
    rng = np.random.default_rng(8)
    pool = list("ab ;:()हि,.")
    for _ in range(200):
        raw = "".join(rng.choice(pool, size=rng.integers(0, 30)))
        once = normalize_text(raw)
        assert normalize_text(once) == once
