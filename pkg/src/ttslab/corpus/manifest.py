"""Dataset manifests: one JSON object per line, one line per utterance."""

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .text import normalize_text

MANIFEST_KEYS = ("id", "audio_path", "text", "speaker_id", "language", "duration")


@dataclass
class Utterance:
    id: str
    audio_path: str
    raw_text: str
    normalized_text: str
    speaker_id: str
    language: str
    duration: float

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError(f"utterance {self.id!r}: duration must be > 0")


@dataclass
class Manifest:
    utterances: list = field(default_factory=list)
    sample_rate: int = 22050

    def __post_init__(self):
        ids = [u.id for u in self.utterances]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate utterance ids: {dupes}")

    def __len__(self):
        return len(self.utterances)

    def __iter__(self):
        return iter(self.utterances)


def load_manifest(path, sample_rate: int = 22050) -> Manifest:
    utterances = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            missing = [k for k in MANIFEST_KEYS if k not in record]
            if missing:
                raise ValueError(f"{path}:{lineno}: missing manifest keys {missing}")
            utterances.append(Utterance(
                id=str(record["id"]),
                audio_path=str(record["audio_path"]),
                raw_text=record["text"],
                normalized_text=normalize_text(record["text"]),
                speaker_id=str(record["speaker_id"]),
                language=str(record["language"]),
                duration=float(record["duration"]),
            ))
    return Manifest(utterances, sample_rate)


def save_manifest(manifest: Manifest, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for u in manifest:
            fh.write(json.dumps({
                "id": u.id,
                "audio_path": u.audio_path,
                "text": u.raw_text,
                "speaker_id": u.speaker_id,
                "language": u.language,
                "duration": u.duration,
            }, ensure_ascii=False) + "\n")


def filter_utterances(manifest: Manifest, max_duration: float = 20.0) -> Manifest:
    """Keep utterances with duration <= max_duration (boundary inclusive),
    preserving order."""
    kept = [u for u in manifest if u.duration <= max_duration]
    return Manifest(kept, manifest.sample_rate)


def with_normalized_text(utterance: Utterance) -> Utterance:
    return replace(utterance, normalized_text=normalize_text(utterance.raw_text))
