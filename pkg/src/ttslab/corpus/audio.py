"""Waveform container and per-utterance audio transforms (resample, tempo)."""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

TARGET_SAMPLE_RATE = 22050


@dataclass
class AudioClip:
    """Mono waveform with samples in [-1, 1]."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ValueError("AudioClip expects a mono 1-D sample array")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("AudioClip contains non-finite samples")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")

    @property
    def num_samples(self) -> int:
        return len(self.samples)

    @property
    def duration(self) -> float:
        return self.num_samples / self.sample_rate


def load_wav(path) -> AudioClip:
    """Read a 16-bit PCM WAV file (stereo is downmixed to mono)."""
    rate, data = wavfile.read(str(path))
    if data.ndim == 2:
        data = data.mean(axis=1)
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
    elif data.dtype == np.int32:
        samples = data.astype(np.float64) / 2147483648.0
    else:
        samples = data.astype(np.float64)
    return AudioClip(np.clip(samples, -1.0, 1.0), int(rate))


def save_wav(clip: AudioClip, path) -> None:
    """Write a 16-bit PCM WAV file."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    pcm = np.clip(clip.samples, -1.0, 1.0)
    wavfile.write(str(path), clip.sample_rate, (pcm * 32767.0).astype(np.int16))


def resample(clip: AudioClip, target: int = TARGET_SAMPLE_RATE) -> AudioClip:
    """Polyphase resampling to `target` Hz. Duration is preserved within one
    sample period; identical rates return the clip unchanged."""
    if target <= 0:
        raise ValueError(f"unsupported target sample rate: {target}")
    if clip.sample_rate == target:
        return AudioClip(clip.samples.copy(), clip.sample_rate)
    g = math.gcd(clip.sample_rate, target)
    out = resample_poly(clip.samples, target // g, clip.sample_rate // g)
    return AudioClip(np.clip(out, -1.0, 1.0), target)


def modulate_tempo(clip: AudioClip, factor: float) -> AudioClip:
    """Time-stretch by waveform-similarity overlap-add: output duration is
    input duration / factor, pitch is preserved (factor < 1 slows down).
    """
    if not 0 < factor <= 2:
        raise ValueError(f"tempo factor must be in (0, 2], got {factor}")
    if factor == 1.0:
        return AudioClip(clip.samples.copy(), clip.sample_rate)

    x = clip.samples
    n_in = len(x)
    n_out = int(round(n_in / factor))
    win_len = 1024
    hop = win_len // 2
    tolerance = 512
    if n_in <= win_len + tolerance:
        # too short for overlap-add; nearest-sample repetition keeps timing
        idx = np.minimum((np.arange(n_out) * factor).astype(np.int64), n_in - 1)
        return AudioClip(x[idx], clip.sample_rate)

    window = np.hanning(win_len)
    out = np.zeros(n_out + win_len)
    norm = np.zeros(n_out + win_len)

    prev_in = 0
    pos_out = 0
    while pos_out < n_out:
        ideal = pos_out * factor
        if pos_out == 0:
            in_pos = 0
        else:
            # the segment that would seamlessly continue the previous copy
            nat_start = min(prev_in + hop, n_in - win_len)
            natural = x[nat_start:nat_start + win_len]
            lo = max(0, int(round(ideal)) - tolerance)
            hi = min(n_in - win_len, int(round(ideal)) + tolerance)
            if hi <= lo:
                in_pos = max(0, min(int(round(ideal)), n_in - win_len))
            else:
                region = x[lo:hi + win_len]
                scores = np.correlate(region, natural, mode="valid")
                in_pos = lo + int(np.argmax(scores))
        seg = x[in_pos:in_pos + win_len]
        out[pos_out:pos_out + win_len] += seg * window
        norm[pos_out:pos_out + win_len] += window
        prev_in = in_pos
        pos_out += hop

    voiced = norm > 1e-8
    out[voiced] /= norm[voiced]
    return AudioClip(np.clip(out[:n_out], -1.0, 1.0), clip.sample_rate)
