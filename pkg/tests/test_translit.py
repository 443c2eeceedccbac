import pytest

from ttslab.corpus import (TransliterationTable, UnmappedGraphemeError, builtin_table,
                           devanagari_iso_table, load_table_tsv, transliterate)

GOLDEN_WORDS = {
    "नमस्ते": "namastē",
    "भारत": "bhārata",
    "हिंदी": "hiṁdī",
    "कविता": "kavitā",
    "गुरु": "guru",
    "देवनागरी": "dēvanāgarī",
    "संगीत": "saṁgīta",
    "विद्या": "vidyā",
    "पुस्तक": "pustaka",
    "अनुवाद": "anuvāda",
}


def test_common_script_passthrough():
    table = devanagari_iso_table()
    assert transliterate("a, b", table) == "a, b"


def test_single_syllable():
    table = devanagari_iso_table()
    assert transliterate("क", table) == "ka"
    assert transliterate("कि", table) == "ki"
    assert transliterate("क्", table) == "k"


def test_golden_words():
    table = devanagari_iso_table()
    for native, iso in GOLDEN_WORDS.items():
        assert transliterate(native, table) == iso


def test_injective_on_demo_words():
    table = devanagari_iso_table()
    outputs = [transliterate(w, table) for w in GOLDEN_WORDS]
    assert len(set(outputs)) == len(outputs)


def test_output_restricted_to_common_script():
    table = devanagari_iso_table()
    for native in GOLDEN_WORDS:
        out = transliterate(native, table)
        assert all(c in table.alphabet or not c.isalpha() for c in out)


def test_unmapped_grapheme_strict():
    table = devanagari_iso_table()
    with pytest.raises(UnmappedGraphemeError) as err:
        transliterate("நமஸ்", table)  # Tamil script, absent from the table
    assert "U+0B" in str(err.value)


def test_unmapped_grapheme_lenient():
    table = devanagari_iso_table()
    assert transliterate("நafter", table, strict=False).endswith("after")


def test_digits_and_punctuation():
    table = devanagari_iso_table()
    assert transliterate("२०२३, ठीक।", table) == "2023, ṭhīka."


def test_builtin_lookup():
    assert builtin_table("hi").language == "hi"
    with pytest.raises(KeyError):
        builtin_table("zz")


def test_tsv_roundtrip(tmp_path):
    path = tmp_path / "tbl.tsv"
    path.write_text("# comment line\nக\tka\nின்\tiṉ\n", encoding="utf-8")
    table = load_table_tsv(path, "ta")
    assert table.language == "ta"
    assert transliterate("கின்", table) == "kaiṉ"


def test_longest_match_wins():
    table = TransliterationTable("xx", {"ab": "LONG", "a": "short", "b": "bee"})
    assert transliterate("ab", table) == "LONG"
    assert transliterate("ba", table) == "beeshort"
