"""Transcript cleanup applied to every utterance before tokenization."""

import re

_WHITESPACE = re.compile(r"\s+")


def normalize_text(raw: str) -> str:
    """Normalize a transcript: ';' and ':' become ',', parentheses are dropped,
    whitespace runs collapse to a single space, ends are stripped.

    Total and idempotent.
    """
    text = raw.replace(";", ",").replace(":", ",")
    text = text.replace("(", "").replace(")", "")
    return _WHITESPACE.sub(" ", text).strip()
