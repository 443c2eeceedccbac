import numpy as np
import pytest

from ttslab.corpus import AudioClip, extract_f0, load_wav, modulate_tempo, resample, save_wav

from conftest import make_tone


def fft_peak_hz(clip: AudioClip) -> float:
    spectrum = np.abs(np.fft.rfft(clip.samples * np.hanning(clip.num_samples)))
    freqs = np.fft.rfftfreq(clip.num_samples, d=1.0 / clip.sample_rate)
    return float(freqs[np.argmax(spectrum)])


def test_resample_identity():
    clip = make_tone(440, 0.5)
    out = resample(clip, 22050)
    assert out.sample_rate == 22050
    assert np.array_equal(out.samples, clip.samples)


def test_resample_length_ratio():
    clip = make_tone(440, 1.0, sample_rate=44100)
    out = resample(clip, 22050)
    assert out.num_samples == 22050
    assert abs(out.duration - clip.duration) <= 1.0 / 22050


def test_resample_preserves_spectral_peak():
    clip = make_tone(440, 1.0, sample_rate=44100)
    out = resample(clip, 22050)
    assert fft_peak_hz(out) == pytest.approx(440, abs=2)


def test_resample_rejects_bad_rate():
    with pytest.raises(ValueError):
        resample(make_tone(440, 0.1), 0)


def test_tempo_identity():
    clip = make_tone(220, 1.0)
    out = modulate_tempo(clip, 1.0)
    assert out.num_samples == clip.num_samples


def test_tempo_duration_ratio():
    clip = make_tone(220, 10.0)
    out = modulate_tempo(clip, 0.77)
    assert out.duration == pytest.approx(10.0 / 0.77, rel=0.01)


def test_tempo_preserves_pitch():
    clip = make_tone(220, 2.0)
    out = modulate_tempo(clip, 0.77)
    voiced = extract_f0(out).f0
    voiced = voiced[voiced > 0]
    assert len(voiced) > 0
    assert np.all(np.abs(voiced - 220) / 220 <= 0.02)


def test_tempo_speedup_too():
    clip = make_tone(150, 2.0)
    out = modulate_tempo(clip, 1.3)
    assert out.duration == pytest.approx(2.0 / 1.3, rel=0.01)


def test_tempo_rejects_nonpositive_factor():
    with pytest.raises(ValueError):
        modulate_tempo(make_tone(220, 0.5), 0.0)
    with pytest.raises(ValueError):
        modulate_tempo(make_tone(220, 0.5), -1.0)


def test_wav_roundtrip(tmp_path):
    clip = make_tone(440, 0.25)
    path = tmp_path / "tone.wav"
    save_wav(clip, path)
    loaded = load_wav(path)
    assert loaded.sample_rate == 22050
    assert loaded.num_samples == clip.num_samples
    assert np.max(np.abs(loaded.samples - clip.samples)) < 1e-3  # 16-bit quantization


def test_audioclip_rejects_nonfinite():
    with pytest.raises(ValueError):
        AudioClip(np.array([0.0, np.nan]), 22050)
