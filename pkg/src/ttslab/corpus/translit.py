"""Transliteration of native scripts to a common romanized representation.

A table maps native grapheme clusters to strings over the common script;
lookup is greedy longest-match. The built-in table covers a demo subset of
Devanagari -> ISO 15919; full-script tables load from TSV files
("native<TAB>common" per line).
"""

import string
import unicodedata
from dataclasses import dataclass, field


class UnmappedGraphemeError(ValueError):
    def __init__(self, graphemes):
        self.graphemes = sorted(set(graphemes))
        super().__init__("no transliteration for: " + " ".join(
            f"{g!r} (U+{ord(g[0]):04X})" for g in self.graphemes))


# characters allowed to pass through any table unchanged
_PUNCTUATION = set(string.punctuation) | {" ", "‘", "’", "“", "”"}


@dataclass
class TransliterationTable:
    language: str
    mapping: dict
    alphabet: frozenset = field(default=None)

    def __post_init__(self):
        if self.alphabet is None:
            chars = set(string.ascii_letters) | set(string.digits)
            for value in self.mapping.values():
                chars.update(value)
            self.alphabet = frozenset(chars)
        self._max_key = max((len(k) for k in self.mapping), default=1)

    def lookup(self, text: str, pos: int):
        """Longest mapping key matching text at pos, or None."""
        end = min(len(text), pos + self._max_key)
        for stop in range(end, pos, -1):
            candidate = text[pos:stop]
            if candidate in self.mapping:
                return candidate, self.mapping[candidate]
        return None


def transliterate(text: str, table: TransliterationTable, strict: bool = True) -> str:
    """Apply the table with greedy longest-match. Characters already in the
    common script, digits, punctuation and whitespace pass through. Unknown
    graphemes raise UnmappedGraphemeError in strict mode and pass through
    otherwise."""
    out = []
    unmapped = []
    pos = 0
    while pos < len(text):
        hit = table.lookup(text, pos)
        if hit is not None:
            key, value = hit
            out.append(value)
            pos += len(key)
            continue
        ch = text[pos]
        if ch in table.alphabet or ch in _PUNCTUATION or ch.isspace():
            out.append(ch)
        else:
            unmapped.append(ch)
            out.append(ch)
        pos += 1
    if strict and unmapped:
        raise UnmappedGraphemeError(unmapped)
    return "".join(out)


def load_table_tsv(path, language: str) -> TransliterationTable:
    mapping = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'native<TAB>common'")
            mapping[unicodedata.normalize("NFC", parts[0])] = parts[1]
    return TransliterationTable(language, mapping)


_DEVANAGARI_CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ṅ",
    "च": "c", "छ": "ch", "ज": "j", "झ": "jh", "ञ": "ñ",
    "ट": "ṭ", "ठ": "ṭh", "ड": "ḍ", "ढ": "ḍh", "ण": "ṇ",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "ś", "ष": "ṣ", "स": "s", "ह": "h", "ळ": "ḷ",
}

_DEVANAGARI_VOWELS = {
    "अ": "a", "आ": "ā", "इ": "i", "ई": "ī", "उ": "u", "ऊ": "ū",
    "ऋ": "r̥", "ए": "ē", "ऐ": "ai", "ओ": "ō", "औ": "au",
}

_DEVANAGARI_MATRAS = {
    "ा": "ā", "ि": "i", "ी": "ī", "ु": "u", "ू": "ū",
    "ृ": "r̥", "े": "ē", "ै": "ai", "ो": "ō", "ौ": "au",
}

_DEVANAGARI_SIGNS = {
    "ं": "ṁ", "ः": "ḥ", "ँ": "m̐", "ऽ": "'", "।": ".", "॥": "..",
}

_VIRAMA = "्"


def devanagari_iso_table() -> TransliterationTable:
    """Demo Devanagari -> ISO 15919 table built by composing consonant bases
    with vowel signs (inherent 'a', virama suppression, matras)."""
    mapping = {}
    for deva, roman in _DEVANAGARI_CONSONANTS.items():
        mapping[deva] = roman + "a"
        mapping[deva + _VIRAMA] = roman
        for matra, vowel in _DEVANAGARI_MATRAS.items():
            mapping[deva + matra] = roman + vowel
    mapping.update(_DEVANAGARI_VOWELS)
    mapping.update(_DEVANAGARI_SIGNS)
    for i, digit in enumerate("०१२३४५६७८९"):
        mapping[digit] = str(i)
    return TransliterationTable("hi", mapping)


def builtin_table(language: str) -> TransliterationTable:
    tables = {"hi": devanagari_iso_table}
    if language not in tables:
        raise KeyError(f"no built-in table for language {language!r}; "
                       f"available: {sorted(tables)}")
    return tables[language]()
