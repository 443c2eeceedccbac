import numpy as np
import pytest
import torch

from ttslab.corpus import (DEFAULT_MEL, LOG_MEL_FLOOR, AudioClip, MelConfig, extract_f0,
                           log_mel_frames, mel_spectrogram)

from conftest import make_tone


def triangle_responses_at(cfg: MelConfig, freq: float) -> np.ndarray:
    # independent oracle: evaluate each triangular filter at `freq` from the
    # mel-spaced break points alone
    def hz_to_mel(hz):
        return 2595.0 * np.log10(1.0 + hz / 700.0)

    def mel_to_hz(mel):
        return 700.0 * (10.0 ** (mel / 2595.0) - 1.0)

    pts = mel_to_hz(np.linspace(hz_to_mel(cfg.f_min), hz_to_mel(cfg.f_max), cfg.n_mels + 2))
    resp = np.zeros(cfg.n_mels)
    for m in range(cfg.n_mels):
        left, center, right = pts[m], pts[m + 1], pts[m + 2]
        resp[m] = max(0.0, min((freq - left) / (center - left), (right - freq) / (right - center)))
    return resp


def test_silence_hits_log_floor():
    mel = mel_spectrogram(AudioClip(np.zeros(22050), 22050))
    assert np.allclose(mel.frames, np.log(LOG_MEL_FLOOR))


def test_frame_count_formula():
    for n_samples in (22050, 22050 + 1, 22050 + 255, 8192, 1024):
        mel = mel_spectrogram(AudioClip(np.zeros(n_samples), 22050))
        assert mel.num_frames == 1 + n_samples // 256


def test_sine_peaks_in_expected_mel_bin():
    mel = mel_spectrogram(make_tone(440, 1.0))
    expected_bin = int(np.argmax(triangle_responses_at(DEFAULT_MEL, 440.0)))
    assert np.all(np.argmax(mel.frames, axis=1) == expected_bin)


def test_deterministic_and_floored():
    clip = make_tone(200, 0.5)
    a = mel_spectrogram(clip)
    b = mel_spectrogram(clip)
    assert np.array_equal(a.frames, b.frames)
    assert np.all(a.frames >= np.log(LOG_MEL_FLOOR) - 1e-12)


def test_too_short_audio_raises():
    with pytest.raises(ValueError):
        mel_spectrogram(AudioClip(np.zeros(512), 22050))


def test_mel_config_validation():
    with pytest.raises(ValueError):
        MelConfig(hop_length=2048).validate(22050)
    with pytest.raises(ValueError):
        MelConfig(f_max=20000).validate(22050)


def test_log_mel_is_differentiable():
    wave = torch.randn(4096, dtype=torch.float64, requires_grad=True) * 0.1
    out = log_mel_frames(wave, DEFAULT_MEL, 22050)
    out.sum().backward()
    assert wave.grad is not None
    assert torch.all(torch.isfinite(wave.grad))


@pytest.mark.parametrize("freq", [80, 110, 150, 220, 300, 400])
def test_f0_on_sines(freq):
    track = extract_f0(make_tone(freq, 1.0))
    voiced = track.f0[track.voiced_mask]
    assert len(voiced) >= 0.9 * len(track.f0)
    assert np.all(np.abs(voiced - freq) / freq <= 0.02)


def test_f0_silence_unvoiced():
    track = extract_f0(AudioClip(np.zeros(22050), 22050))
    assert np.all(track.f0 == 0)


def test_f0_one_value_per_mel_frame():
    clip = make_tone(220, 0.73)
    assert len(extract_f0(clip).f0) == mel_spectrogram(clip).num_frames


def test_f0_voiced_values_inside_search_band():
    rng = np.random.default_rng(3)
    noisy = AudioClip(np.clip(rng.normal(0, 0.2, 22050), -1, 1), 22050)
    track = extract_f0(noisy)
    voiced = track.f0[track.voiced_mask]
    assert np.all((voiced >= 65.0) & (voiced <= 600.0))
