"""Dataset ingestion, preprocessing and feature extraction."""

from .audio import TARGET_SAMPLE_RATE, AudioClip, load_wav, modulate_tempo, resample, save_wav
from .features import (DEFAULT_MEL, LOG_MEL_FLOOR, MelConfig, MelSpectrogram, PitchTrack,
                       extract_f0, log_mel_frames, mel_center_frequencies, mel_filter_bank,
                       mel_spectrogram)
from .manifest import Manifest, Utterance, filter_utterances, load_manifest, save_manifest
from .text import normalize_text
from .translit import (TransliterationTable, UnmappedGraphemeError, builtin_table,
                       devanagari_iso_table, load_table_tsv, transliterate)

__all__ = [
    "TARGET_SAMPLE_RATE", "AudioClip", "load_wav", "save_wav", "resample", "modulate_tempo",
    "DEFAULT_MEL", "LOG_MEL_FLOOR", "MelConfig", "MelSpectrogram", "PitchTrack",
    "extract_f0", "log_mel_frames", "mel_center_frequencies", "mel_filter_bank",
    "mel_spectrogram",
    "Manifest", "Utterance", "filter_utterances", "load_manifest", "save_manifest",
    "normalize_text",
    "TransliterationTable", "UnmappedGraphemeError", "builtin_table", "devanagari_iso_table",
    "load_table_tsv", "transliterate",
]
