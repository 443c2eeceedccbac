"""Desk-scale text-to-speech research pipeline.

Subpackages: corpus (data and features), align (alignment learning),
acoustic (text-to-mel model and losses), vocoder (mel-to-waveform GAN),
train (loops, schedules, synthesis), evaluation (objective metrics),
mos (listening-test backend), kernels (compiled DP cores).
"""

__version__ = "0.1.0"
