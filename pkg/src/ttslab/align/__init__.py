"""Alignment learning: soft alignments, forward-sum loss, Viterbi binarization."""

from .lattice import (DurationVector, HardAlignment, InfeasibleAlignmentError, SoftAlignment,
                      binarization_loss, durations_from_hard, forward_sum_batched,
                      forward_sum_loss, viterbi_hard)
from .network import AlignmentNetwork, soft_alignment, soft_alignment_from_affinity

__all__ = [
    "DurationVector", "HardAlignment", "InfeasibleAlignmentError", "SoftAlignment",
    "binarization_loss", "durations_from_hard", "forward_sum_batched", "forward_sum_loss",
    "viterbi_hard", "AlignmentNetwork", "soft_alignment", "soft_alignment_from_affinity",
]
