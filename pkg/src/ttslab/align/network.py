"""Learned pairwise affinities between text and mel features.

Affinity is the negative squared L2 distance between linearly projected text
and mel features, normalized with a softmax across the text axis. The network
sees text-encoder features only: speaker and language embeddings are added
downstream of it, never here.
"""

import numpy as np
import torch
from torch import nn

from .lattice import NEG, SoftAlignment


def soft_alignment_from_affinity(affinity) -> SoftAlignment:
    """Softmax over the text axis of an affinity matrix -> column-stochastic."""
    aff = torch.as_tensor(np.asarray(affinity, dtype=np.float64))
    probs = torch.softmax(aff, dim=0)
    return SoftAlignment(probs.numpy())


def soft_alignment(text_feats, mel_feats, network=None) -> SoftAlignment:
    """Soft alignment of (T_text, d) text features to (T_mel, d') mel features.

    With a network, features are projected first; without one the feature
    dimensions must already match and raw negative squared distances are used.
    """
    text = np.asarray(text_feats, dtype=np.float64)
    mel = np.asarray(mel_feats, dtype=np.float64)
    if text.size == 0 or mel.size == 0:
        raise ValueError("feature sequences must be non-empty")
    if network is not None:
        with torch.no_grad():
            log_probs = network(torch.from_numpy(text).float().unsqueeze(0),
                                torch.from_numpy(mel).float().unsqueeze(0))
        return SoftAlignment(log_probs.squeeze(0).exp().double().numpy())
    if text.shape[1] != mel.shape[1]:
        raise ValueError(f"dimension mismatch: text d={text.shape[1]}, mel d'={mel.shape[1]} "
                         "(pass a projection network for unequal dims)")
    dist_sq = ((text[:, None, :] - mel[None, :, :]) ** 2).sum(axis=2)
    return soft_alignment_from_affinity(-dist_sq)


class AlignmentNetwork(nn.Module):
    """Projects text and mel features and scores their pairwise affinity."""

    def __init__(self, text_dim: int, mel_dim: int = 80, attention_dim: int = 80):
        super().__init__()
        self.key_proj = nn.Sequential(
            nn.Conv1d(text_dim, 2 * attention_dim, kernel_size=3, padding=1),
            nn.ReLU(),
            nn.Conv1d(2 * attention_dim, attention_dim, kernel_size=1),
        )
        self.query_proj = nn.Sequential(
            nn.Conv1d(mel_dim, 2 * attention_dim, kernel_size=3, padding=1),
            nn.ReLU(),
            nn.Conv1d(2 * attention_dim, attention_dim, kernel_size=1),
        )

    def forward(self, text: torch.Tensor, mel: torch.Tensor,
                text_pad_mask: torch.Tensor | None = None) -> torch.Tensor:
        """(B, S, d) text and (B, T, mel_dim) mel -> (B, S, T) log probabilities,
        normalized over the text axis. Padded tokens get effectively zero mass."""
        keys = self.key_proj(text.transpose(1, 2))      # (B, A, S)
        queries = self.query_proj(mel.transpose(1, 2))  # (B, A, T)
        dist_sq = ((keys.unsqueeze(3) - queries.unsqueeze(2)) ** 2).sum(dim=1)
        affinity = -dist_sq                             # (B, S, T)
        if text_pad_mask is not None:
            affinity = affinity.masked_fill(text_pad_mask.unsqueeze(-1), NEG)
        return torch.log_softmax(affinity, dim=1)
