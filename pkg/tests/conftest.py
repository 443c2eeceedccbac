import numpy as np
import pytest

from ttslab.corpus import AudioClip


def make_tone(freq: float, duration: float = 1.0, sample_rate: int = 22050,
              amplitude: float = 0.5) -> AudioClip:
    t = np.arange(int(round(duration * sample_rate))) / sample_rate
    return AudioClip(amplitude * np.sin(2 * np.pi * freq * t), sample_rate)


@pytest.fixture
def tone():
    return make_tone
