"""Frame-level feature extraction: log-mel spectrograms and F0 tracks.

The mel transform is written once in torch so the vocoder's spectral loss can
backpropagate through it; the numpy-facing wrappers below run it without
gradients.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import torch

from .audio import AudioClip

LOG_MEL_FLOOR = 1e-5


@dataclass(frozen=True)
class MelConfig:
    n_fft: int = 1024
    hop_length: int = 256
    win_length: int = 1024
    n_mels: int = 80
    f_min: float = 0.0
    f_max: float = 8000.0

    def validate(self, sample_rate: int) -> None:
        if not self.hop_length <= self.win_length <= self.n_fft:
            raise ValueError("need hop_length <= win_length <= n_fft")
        if not 0 <= self.f_min < self.f_max <= sample_rate / 2:
            raise ValueError("need 0 <= f_min < f_max <= sample_rate / 2")

    def num_frames(self, num_samples: int) -> int:
        return 1 + num_samples // self.hop_length


DEFAULT_MEL = MelConfig()


@dataclass
class MelSpectrogram:
    """(frames, n_mels) log-mel magnitudes; every entry >= log(LOG_MEL_FLOOR)."""

    frames: np.ndarray
    config: MelConfig
    sample_rate: int = 22050

    def __post_init__(self):
        self.frames = np.asarray(self.frames, dtype=np.float64)
        if self.frames.ndim != 2 or self.frames.shape[1] != self.config.n_mels:
            raise ValueError(f"expected (T, {self.config.n_mels}) frames, got {self.frames.shape}")
        if not np.all(np.isfinite(self.frames)):
            raise ValueError("mel frames contain non-finite entries")

    @property
    def num_frames(self) -> int:
        return self.frames.shape[0]


@dataclass
class PitchTrack:
    """Per-frame F0 in Hz, 0 where unvoiced; frame grid matches the mel config."""

    f0: np.ndarray
    hop_length: int = 256

    def __post_init__(self):
        self.f0 = np.asarray(self.f0, dtype=np.float64)
        if np.any(self.f0 < 0):
            raise ValueError("F0 values must be >= 0")

    @property
    def voiced_mask(self) -> np.ndarray:
        return self.f0 > 0


def _hz_to_mel(hz):
    return 2595.0 * np.log10(1.0 + np.asarray(hz, dtype=np.float64) / 700.0)


def _mel_to_hz(mel):
    return 700.0 * (10.0 ** (np.asarray(mel, dtype=np.float64) / 2595.0) - 1.0)


@lru_cache(maxsize=8)
def mel_filter_bank(cfg: MelConfig, sample_rate: int) -> np.ndarray:
    """Triangular mel filterbank, shape (n_mels, n_fft // 2 + 1)."""
    cfg.validate(sample_rate)
    n_bins = cfg.n_fft // 2 + 1
    fft_freqs = np.linspace(0.0, sample_rate / 2, n_bins)
    mel_points = np.linspace(_hz_to_mel(cfg.f_min), _hz_to_mel(cfg.f_max), cfg.n_mels + 2)
    hz_points = _mel_to_hz(mel_points)

    fb = np.zeros((cfg.n_mels, n_bins))
    for m in range(cfg.n_mels):
        left, center, right = hz_points[m], hz_points[m + 1], hz_points[m + 2]
        up = (fft_freqs - left) / max(center - left, 1e-10)
        down = (right - fft_freqs) / max(right - center, 1e-10)
        fb[m] = np.clip(np.minimum(up, down), 0.0, None)
    return fb


def mel_center_frequencies(cfg: MelConfig) -> np.ndarray:
    """Center frequency in Hz of each mel filter."""
    mel_points = np.linspace(_hz_to_mel(cfg.f_min), _hz_to_mel(cfg.f_max), cfg.n_mels + 2)
    return _mel_to_hz(mel_points)[1:-1]


def log_mel_frames(wave: torch.Tensor, cfg: MelConfig, sample_rate: int,
                   floor: float = LOG_MEL_FLOOR) -> torch.Tensor:
    """Differentiable log-mel transform: (..., N) samples -> (..., T, n_mels).

    Centered framing, so T = 1 + N // hop_length.
    """
    cfg.validate(sample_rate)
    if wave.shape[-1] < cfg.win_length:
        raise ValueError(f"audio shorter than one analysis window ({cfg.win_length} samples)")
    squeeze = wave.dim() == 1
    if squeeze:
        wave = wave.unsqueeze(0)
    window = torch.hann_window(cfg.win_length, dtype=wave.dtype, device=wave.device)
    spec = torch.stft(wave, cfg.n_fft, hop_length=cfg.hop_length, win_length=cfg.win_length,
                      window=window, center=True, pad_mode="reflect", onesided=True,
                      return_complex=True)
    power = spec.real ** 2 + spec.imag ** 2  # (B, n_bins, T)
    fb = torch.as_tensor(mel_filter_bank(cfg, sample_rate), dtype=wave.dtype, device=wave.device)
    mel = torch.matmul(fb, power)  # (B, n_mels, T)
    out = torch.log(torch.clamp(mel, min=floor)).transpose(1, 2)
    return out.squeeze(0) if squeeze else out


def mel_spectrogram(clip: AudioClip, cfg: MelConfig = DEFAULT_MEL) -> MelSpectrogram:
    """Log-mel spectrogram of a clip; raises if the clip is shorter than one window."""
    with torch.no_grad():
        frames = log_mel_frames(torch.from_numpy(clip.samples).double(), cfg, clip.sample_rate)
    return MelSpectrogram(frames.numpy(), cfg, clip.sample_rate)


def extract_f0(clip: AudioClip, cfg: MelConfig = DEFAULT_MEL,
               f_min_search: float = 65.0, f_max_search: float = 600.0,
               voicing_threshold: float = 0.3) -> PitchTrack:
    """Normalized-autocorrelation F0 estimate, one value per mel frame.

    Frames whose peak normalized autocorrelation in the search band falls
    below the voicing threshold (and silent frames) are marked 0.
    """
    sr = clip.sample_rate
    hop, win = cfg.hop_length, cfg.win_length
    n_frames = cfg.num_frames(clip.num_samples)
    half = win // 2
    padded = np.pad(clip.samples, (half, half + win))
    starts = np.arange(n_frames) * hop
    segs = np.lib.stride_tricks.sliding_window_view(padded, win)[starts]

    tau_min = max(2, int(np.floor(sr / f_max_search)))
    tau_max = min(int(np.ceil(sr / f_min_search)), win - 2)
    fft_size = 1 << int(np.ceil(np.log2(2 * win)))

    spec = np.fft.rfft(segs, fft_size, axis=1)
    ac = np.fft.irfft(spec * np.conj(spec), fft_size, axis=1)[:, :win]

    sq = np.cumsum(segs ** 2, axis=1)
    total = sq[:, -1:]
    taus = np.arange(tau_min - 1, tau_max + 2)  # one extra on each side for refinement
    e_head = sq[:, win - 1 - taus]              # energy of seg[: win - tau]
    e_tail = total - np.where(taus > 0, sq[:, taus - 1], 0.0)
    nacf = ac[:, taus] / (np.sqrt(e_head * e_tail) + 1e-12)

    band = slice(1, len(taus) - 1)
    best = np.argmax(nacf[:, band], axis=1) + 1
    rows = np.arange(n_frames)
    peak = nacf[rows, best]
    voiced = (peak >= voicing_threshold) & (total[:, 0] > 1e-9)

    # parabolic refinement around the integer-lag peak
    left, mid, right = nacf[rows, best - 1], peak, nacf[rows, best + 1]
    denom = left - 2 * mid + right
    delta = np.where(np.abs(denom) > 1e-12, 0.5 * (left - right) / denom, 0.0)
    lag = taus[best] + np.clip(delta, -0.5, 0.5)

    f0 = np.where(voiced, np.clip(sr / lag, f_min_search, f_max_search), 0.0)
    return PitchTrack(f0, hop_length=hop)
