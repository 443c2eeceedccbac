"""Monotonic text-to-frame alignment lattice.

Every mel frame is assigned one text index; the index starts at the first
token, ends at the last, and advances by 0 or 1 per frame. The forward-sum
loss is the negative log of the total probability over all such paths (log
space with log-sum-exp stabilization); the Viterbi pass picks the single best
path and its frame counts become the duration targets.
"""

from dataclasses import dataclass

import numpy as np
import torch

from .. import kernels

NEG = -1e9  # effectively log(0), finite to keep autograd clean


class InfeasibleAlignmentError(ValueError):
    def __init__(self, n_text, n_frames):
        super().__init__(f"infeasible alignment: {n_frames} frames < {n_text} tokens")


@dataclass
class SoftAlignment:
    """(T_text, T_mel) probabilities; each mel-frame column sums to 1."""

    probs: np.ndarray

    def __post_init__(self):
        self.probs = np.asarray(self.probs, dtype=np.float64)
        if self.probs.ndim != 2:
            raise ValueError("soft alignment must be a 2-D matrix")
        if np.any(self.probs < 0) or np.any(self.probs > 1):
            raise ValueError("soft alignment entries must lie in [0, 1]")
        col_sums = self.probs.sum(axis=0)
        if not np.allclose(col_sums, 1.0, atol=1e-4):
            raise ValueError("each mel-frame column must sum to 1")

    @property
    def shape(self):
        return self.probs.shape


@dataclass
class HardAlignment:
    """(T_text, T_mel) binary assignment: one token per frame, monotone,
    covering the first through last token."""

    assignment: np.ndarray

    def __post_init__(self):
        self.assignment = np.asarray(self.assignment)
        a = self.assignment
        if a.ndim != 2 or not np.all((a == 0) | (a == 1)):
            raise ValueError("hard alignment must be a binary matrix")
        if not np.all(a.sum(axis=0) == 1):
            raise ValueError("each frame must be assigned exactly one token")
        path = a.argmax(axis=0)
        steps = np.diff(path)
        if np.any(steps < 0) or np.any(steps > 1):
            raise ValueError("assigned token index must advance by 0 or 1 per frame")
        if path[0] != 0 or path[-1] != a.shape[0] - 1:
            raise ValueError("path must start at the first token and end at the last")

    @property
    def path(self) -> np.ndarray:
        return self.assignment.argmax(axis=0)

    @classmethod
    def from_path(cls, path, n_text: int):
        path = np.asarray(path, dtype=np.int64)
        a = np.zeros((n_text, len(path)), dtype=np.uint8)
        a[path, np.arange(len(path))] = 1
        return cls(a)


@dataclass
class DurationVector:
    """Per-token frame counts; sums to the number of mel frames."""

    durations: np.ndarray

    def __post_init__(self):
        self.durations = np.asarray(self.durations, dtype=np.int64)
        if np.any(self.durations < 0):
            raise ValueError("durations must be >= 0")

    @property
    def total(self) -> int:
        return int(self.durations.sum())


def _as_probs_tensor(soft) -> torch.Tensor:
    if isinstance(soft, SoftAlignment):
        return torch.from_numpy(soft.probs)
    if isinstance(soft, torch.Tensor):
        return soft
    return torch.from_numpy(np.asarray(soft, dtype=np.float64))


def forward_sum_batched(log_probs: torch.Tensor, text_lens: torch.Tensor,
                        mel_lens: torch.Tensor) -> torch.Tensor:
    """Negative log of the total path probability for a padded batch.

    log_probs: (B, S_max, T_max); returns one loss per batch item.
    """
    bsz, n_text, n_frames = log_probs.shape
    if torch.any(mel_lens < text_lens):
        b = int(torch.argmax((mel_lens < text_lens).int()))
        raise InfeasibleAlignmentError(int(text_lens[b]), int(mel_lens[b]))

    token_idx = torch.arange(n_text, device=log_probs.device)
    pad = token_idx.unsqueeze(0) >= text_lens.unsqueeze(1)  # (B, S)
    lp = log_probs.masked_fill(pad.unsqueeze(-1), NEG)

    alpha = torch.full((bsz, n_text), NEG, dtype=lp.dtype, device=lp.device)
    alpha = alpha.clone()
    alpha[:, 0] = lp[:, 0, 0]
    neg_col = torch.full((bsz, 1), NEG, dtype=lp.dtype, device=lp.device)
    for t in range(1, n_frames):
        moved = torch.cat([neg_col, alpha[:, :-1]], dim=1)
        stepped = lp[:, :, t] + torch.logaddexp(alpha, moved)
        active = (t < mel_lens).unsqueeze(1)
        alpha = torch.where(active, stepped, alpha)
    final = alpha.gather(1, (text_lens - 1).long().unsqueeze(1)).squeeze(1)
    return -final


def forward_sum_loss(soft):
    """Forward-sum aligner loss of a single soft alignment.

    Accepts a SoftAlignment, a (T_text, T_mel) array, or a torch tensor (the
    tensor path stays on the autograd graph). Raises InfeasibleAlignmentError
    when there are fewer frames than tokens.
    """
    probs = _as_probs_tensor(soft)
    n_text, n_frames = probs.shape
    if n_frames < n_text:
        raise InfeasibleAlignmentError(n_text, n_frames)
    log_probs = torch.log(torch.clamp(probs, min=torch.finfo(probs.dtype).tiny))
    lens = torch.tensor([n_text]), torch.tensor([n_frames])
    loss = forward_sum_batched(log_probs.unsqueeze(0), *lens).squeeze(0)
    if isinstance(soft, torch.Tensor):
        return loss
    return float(loss)


def viterbi_hard(soft) -> HardAlignment:
    """Single best monotonic complete path through the soft alignment."""
    probs = soft.probs if isinstance(soft, SoftAlignment) else np.asarray(soft)
    if isinstance(soft, torch.Tensor):
        probs = soft.detach().cpu().numpy()
    n_text, n_frames = probs.shape
    if n_frames < n_text:
        raise InfeasibleAlignmentError(n_text, n_frames)
    with np.errstate(divide="ignore"):
        log_probs = np.log(probs)
    path = kernels.viterbi_path(log_probs)
    return HardAlignment.from_path(path, n_text)


def binarization_loss(hard, soft):
    """Sum over cells of -hard * log(soft): the cross-entropy pulling the
    soft alignment toward its binarized counterpart."""
    hard_m = hard.assignment if isinstance(hard, HardAlignment) else hard
    if isinstance(soft, torch.Tensor):
        hard_t = torch.as_tensor(np.asarray(hard_m), dtype=soft.dtype, device=soft.device) \
            if not isinstance(hard_m, torch.Tensor) else hard_m.to(soft.dtype)
        if hard_t.shape != soft.shape:
            raise ValueError(f"shape mismatch: {tuple(hard_t.shape)} vs {tuple(soft.shape)}")
        log_soft = torch.log(torch.clamp(soft, min=torch.finfo(soft.dtype).tiny))
        return -(hard_t * log_soft).sum()
    probs = soft.probs if isinstance(soft, SoftAlignment) else np.asarray(soft, dtype=np.float64)
    hard_m = np.asarray(hard_m)
    if hard_m.shape != probs.shape:
        raise ValueError(f"shape mismatch: {hard_m.shape} vs {probs.shape}")
    with np.errstate(divide="ignore"):
        log_soft = np.log(probs)
    return float(-(hard_m * log_soft)[hard_m > 0].sum())


def durations_from_hard(hard: HardAlignment) -> DurationVector:
    """Frames assigned to each token; the counts partition the mel frames."""
    n_text = hard.assignment.shape[0]
    counts = np.bincount(hard.path, minlength=n_text)
    return DurationVector(counts)
