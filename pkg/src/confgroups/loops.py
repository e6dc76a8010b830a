"""Sampled loops of point configurations and their numeric invariants.

A ConfigLoop is a closed path of k labelled points in C^n given by sampled
frames.  Two invariants are extracted:

* extract_braid reads a braid word off a loop of collinear configurations by
  projecting every frame onto the common complex line and recording how the
  real-part order changes between consecutive frames.  Crossing sign
  convention: a counterclockwise half-turn of a point pair is the positive
  generator, i.e. the strand moving left-to-right passes with the smaller
  imaginary part.  The opposite convention would invert every extracted word.
* det_winding computes the winding number around 0 of the frame determinant
  det[x_1 - x_0, ..., x_n - x_0] for loops of k = n+1 points spanning all of
  C^n, by summing principal-branch argument increments (auto-refining by
  linear interpolation whenever a single increment reaches pi/2).

Between consecutive frames strands move linearly, so each pair of strands
crosses at most once per step and a step's crossings are exactly the
inversions of its rank permutation.  A step whose crossings all share one
sign is read as that permutation braid (this is what the full- and
half-turn steps of the standard loops produce); mixed-sign steps are split
by bisection, and simultaneous mixed crossings are accepted only when they
decompose into disjoint uniform-sign blocks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .braids import BraidWord, _tables


class LoopError(ValueError):
    """Invalid loop data or failed invariant extraction."""


class TieError(LoopError):
    """Two strands could not be separated within the perturbation budget."""


class CoarseFramesError(LoopError):
    """Crossings too entangled to resolve at this sampling resolution."""


class DegenerateSpanError(LoopError):
    """A frame's span dropped below the required dimension."""


_TIE_MARGIN = 1e-9
_LINE_TOL = 1e-8
_SPAN_TOL = 1e-8
_DET_FLOOR = 1e-12
_CLOSURE_TOL = 1e-6
_BISECT_SPLITS = (0.5, 0.25, 0.75, 0.125, 0.875, 0.0625, 0.9375, 0.03125)


@dataclass(frozen=True, eq=False)
class ConfigLoop:
    k: int
    n: int
    frames: np.ndarray  # (T, k, n) complex, read-only

    def __post_init__(self) -> None:
        arr = np.array(self.frames, dtype=complex)
        if arr.ndim != 3 or arr.shape[1:] != (self.k, self.n):
            raise LoopError(
                f"frames must have shape (T, {self.k}, {self.n}), got {arr.shape}"
            )
        if arr.shape[0] < 2:
            raise LoopError("a loop needs at least 2 frames")
        if self.k < 1 or self.n < 1:
            raise LoopError("need k >= 1 and n >= 1")
        scale = max(1.0, float(np.max(np.abs(arr)))) if arr.size else 1.0
        for t in range(arr.shape[0]):
            if _min_pairwise_distance(arr[t]) <= _TIE_MARGIN * scale:
                raise LoopError(f"frame {t} has coincident points")
        if not _frames_match_as_sets(arr[0], arr[-1], _CLOSURE_TOL * scale):
            raise LoopError("loop is not closed: first and last frames differ as point sets")
        arr.setflags(write=False)
        object.__setattr__(self, "frames", arr)

    @property
    def num_frames(self) -> int:
        return int(self.frames.shape[0])


def _min_pairwise_distance(frame: np.ndarray) -> float:
    k = frame.shape[0]
    if k < 2:
        return math.inf
    diffs = frame[:, None, :] - frame[None, :, :]
    dist = np.sqrt(np.sum(np.abs(diffs) ** 2, axis=-1))
    return float(np.min(dist[np.triu_indices(k, 1)]))

def _frames_match_as_sets(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    # bijective nearest-point matching; unordered flavors close up to relabeling
    k = a.shape[0]
    used = [False] * k
    for p in range(k):
        dist = np.sqrt(np.sum(np.abs(b - a[p]) ** 2, axis=-1))
        q = int(np.argmin(np.where(used, np.inf, dist)))
        if used[q] or dist[q] > tol:
            return False
        used[q] = True
    return True


# ---------------------------------------------------------------------------
# span dimension


@dataclass(frozen=True)
class SpanReport:
    frame_index: int
    singular_values: tuple[float, ...]
    dimension: int


def span_dimension(points, tol: float = _SPAN_TOL) -> int:
    """Affine span dimension: rank of the difference matrix, singular values
    counted above tol relative to the largest."""
    pts = np.asarray(points, dtype=complex)
    if pts.ndim != 2:
        raise LoopError("points must be a k x n array")
    if pts.shape[0] == 1:
        return 0
    sv = np.linalg.svd(pts[1:] - pts[0], compute_uv=False)
    if sv.size == 0 or sv[0] < 1e-300:
        return 0
    return int(np.sum(sv > tol * sv[0]))


def span_reports(loop: ConfigLoop, tol: float = _SPAN_TOL) -> list[SpanReport]:
    out = []
    for t in range(loop.num_frames):
        pts = loop.frames[t]
        if pts.shape[0] == 1:
            sv: tuple[float, ...] = ()
        else:
            sv = tuple(float(v) for v in np.linalg.svd(pts[1:] - pts[0], compute_uv=False))
        out.append(SpanReport(t, sv, span_dimension(pts, tol)))
    return out


# ---------------------------------------------------------------------------
# named loops


def make_gamma_loop(k: int, frames: int | None = None) -> ConfigLoop:
    """Points z, 2z, ..., kz on a rotating line through 0, embedded in C^2
    (second coordinate 0); one full counterclockwise turn of z."""
    if k < 2:
        raise LoopError("need k >= 2")
    floor = 8 * k * k
    count = floor if frames is None else frames
    if count < floor:
        raise LoopError(f"resolution below floor: need at least {floor} frames for k={k}")
    ts = np.arange(count) / (count - 1)
    z = np.exp(2j * np.pi * ts)
    arr = np.zeros((count, k, 2), dtype=complex)
    for j in range(1, k + 1):
        arr[:, j - 1, 0] = j * z
    arr[-1] = arr[0]  # close exactly
    return ConfigLoop(k, 2, arr)


def make_h_loop(n: int, frames: int = 64) -> ConfigLoop:
    """Points 0, e_1, ..., e_(n-1), z e_n with z once around the unit circle;
    the frame determinant path is exactly z."""
    if n < 1:
        raise LoopError("need n >= 1")
    if frames < 64:
        raise LoopError(f"resolution below floor: need at least 64 frames, got {frames}")
    ts = np.arange(frames) / (frames - 1)
    z = np.exp(2j * np.pi * ts)
    arr = np.zeros((frames, n + 1, n), dtype=complex)
    for j in range(1, n):
        arr[:, j, j - 1] = 1.0
    arr[:, n, n - 1] = z
    arr[-1] = arr[0]
    return ConfigLoop(n + 1, n, arr)


def reverse(loop: ConfigLoop) -> ConfigLoop:
    return ConfigLoop(loop.k, loop.n, loop.frames[::-1])


def concatenate(a: ConfigLoop, b: ConfigLoop) -> ConfigLoop:
    if (a.k, a.n) != (b.k, b.n):
        raise LoopError("loops live in different configuration spaces")
    scale = max(1.0, float(np.max(np.abs(a.frames))), float(np.max(np.abs(b.frames))))
    if float(np.max(np.abs(a.frames[-1] - b.frames[0]))) > _CLOSURE_TOL * scale:
        raise LoopError("endpoints do not match (pointwise) at the concatenation seam")
    return ConfigLoop(a.k, a.n, np.concatenate([a.frames, b.frames[1:]], axis=0))


# ---------------------------------------------------------------------------
# JSON form


def loop_to_json_obj(loop: ConfigLoop) -> dict:
    frames = [
        [[[float(c.real), float(c.imag)] for c in point] for point in frame]
        for frame in loop.frames
    ]
    return {"k": loop.k, "n": loop.n, "frames": frames, "closed": True}


def loop_from_json_obj(obj: dict) -> ConfigLoop:
    try:
        k, n = int(obj["k"]), int(obj["n"])
        if not obj.get("closed", True):
            raise LoopError("loop JSON must describe a closed loop")
        arr = np.array(
            [
                [[complex(re, im) for re, im in point] for point in frame]
                for frame in obj["frames"]
            ],
            dtype=complex,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LoopError):
            raise
        raise LoopError(f"malformed loop JSON: {exc}") from exc
    return ConfigLoop(k, n, arr)


# ---------------------------------------------------------------------------
# braid extraction


def _project_to_line(loop: ConfigLoop, line_tol: float) -> np.ndarray:
    """Affine coordinates of every point on the single complex line carrying
    the whole loop; error if any frame leaves that line."""
    if loop.n == 1:
        return loop.frames[:, :, 0]
    base = loop.frames[0, 0]
    direction = loop.frames[0, 1] - base
    norm = float(np.sqrt(np.sum(np.abs(direction) ** 2)))
    direction = direction / norm
    rel = loop.frames - base
    coeffs = rel @ np.conj(direction)
    resid = rel - coeffs[..., None] * direction
    scale = max(1.0, float(np.max(np.abs(rel))))
    worst = float(np.max(np.abs(resid)))
    if worst > line_tol * scale:
        raise LoopError(
            f"frames are not collinear on a common line (residual {worst:.3e})"
        )
    return coeffs


def _has_real_tie(z: np.ndarray, margin: float) -> bool:
    re = np.sort(z.real)
    return bool(np.any(np.diff(re) <= margin))


def _resolve_frame_ties(zf: np.ndarray, margin: float) -> list[np.ndarray]:
    frames = [zf[t] for t in range(zf.shape[0])]
    out: list[np.ndarray] = []
    last = len(frames) - 1
    for t, frame in enumerate(frames):
        if not _has_real_tie(frame, margin):
            out.append(frame)
            continue
        other = frames[t + 1] if t < last else frames[t - 1]
        for attempt in range(1, 9):
            w = 2.0 ** -attempt
            cand = (1 - w) * frame + w * other
            if not _has_real_tie(cand, margin):
                out.append(cand)
                break
        else:
            raise TieError(
                f"frame {t}: points share a real part beyond the perturbation budget"
            )
    return out


def _word_of_rank_perm(k: int, perm: tuple[int, ...], offset: int, sign: int):
    return [(idx + offset, sign) for idx in _tables(len(perm)).word_of(perm)]


def _block_letters(k: int, pi: tuple[int, ...], crossings, margin: float):
    """Simultaneous crossings: split into rank-interval blocks; each block must
    be uniform-sign and is emitted as a permutation braid on its interval."""
    intervals = []
    for _, (ra, rb), sign in crossings:
        intervals.append((min(ra, rb), max(ra, rb), sign))
    intervals.sort()
    blocks: list[list[tuple[int, int, int]]] = []
    for item in intervals:
        if blocks and item[0] <= blocks[-1][-1][1]:
            blocks[-1].append(item)
        else:
            blocks.append([item])
    # merged greedily on sorted lows, so block hulls are pairwise disjoint
    letters: list[tuple[int, int]] = []
    for block in blocks:
        lo = min(a for a, _, _ in block)
        hi = max(b for _, b, _ in block)
        signs = {s for _, _, s in block}
        if len(signs) != 1:
            raise CoarseFramesError(
                "simultaneous crossings of opposite sign share a rank interval; "
                "increase the frame count"
            )
        if sorted(pi[r] for r in range(lo, hi + 1)) != list(range(lo, hi + 1)):
            raise CoarseFramesError(
                "crossing block does not close under the step permutation; "
                "increase the frame count"
            )
        sub = tuple(pi[r] - lo for r in range(lo, hi + 1))
        letters += _word_of_rank_perm(k, sub, lo, signs.pop())
    return letters


def _step_letters(E: np.ndarray, F: np.ndarray, k: int, margin: float, depth: int):
    reE, reF = E.real, F.real
    orderE = np.argsort(reE, kind="stable")
    orderF = np.argsort(reF, kind="stable")
    rankE = np.empty(k, dtype=int)
    rankF = np.empty(k, dtype=int)
    rankE[orderE] = np.arange(k)
    rankF[orderF] = np.arange(k)
    pi = tuple(int(rankF[orderE[r]]) for r in range(k))

    crossings = []
    for p in range(k):
        for q in range(p + 1, k):
            dE = reE[p] - reE[q]
            dF = reF[p] - reF[q]
            if dE * dF >= 0:
                continue
            tstar = dE / (dE - dF)
            mover, other = (p, q) if dE < 0 else (q, p)
            im_mover = E[mover].imag + tstar * (F[mover].imag - E[mover].imag)
            im_other = E[other].imag + tstar * (F[other].imag - E[other].imag)
            gap = im_other - im_mover
            if abs(gap) <= margin:
                raise TieError(
                    "two strands meet at a crossing instant; the loop leaves the "
                    "configuration space between frames"
                )
            # positive = counterclockwise: the left-to-right mover passes below
            sign = 1 if gap > 0 else -1
            crossings.append((float(tstar), (int(rankE[p]), int(rankE[q])), sign))

    if not crossings:
        return []
    signs = {s for _, _, s in crossings}
    if len(signs) == 1:
        return _word_of_rank_perm(k, pi, 0, signs.pop())
    times = [t for t, _, _ in crossings]
    if depth <= 0 or max(times) - min(times) < 2.0 ** -40:
        return _block_letters(k, pi, crossings, margin)
    for split in _BISECT_SPLITS:
        mid = (1 - split) * E + split * F
        if not _has_real_tie(mid, margin):
            return _step_letters(E, mid, k, margin, depth - 1) + _step_letters(
                mid, F, k, margin, depth - 1
            )
    raise TieError("could not find a tie-free bisection frame inside a step")


def extract_braid(
    loop: ConfigLoop,
    *,
    tie_margin: float = _TIE_MARGIN,
    line_tol: float = _LINE_TOL,
    max_depth: int = 32,
) -> BraidWord:
    """Braid word of a loop of collinear configurations (n = 1, or all frames
    on one common complex line)."""
    if loop.k == 1:
        return BraidWord(1)
    zf = _project_to_line(loop, line_tol)
    scale = max(1.0, float(np.max(np.abs(zf))))
    margin = tie_margin * scale
    eff = _resolve_frame_ties(zf, margin)
    letters: list[tuple[int, int]] = []
    for t in range(len(eff) - 1):
        letters += _step_letters(eff[t], eff[t + 1], loop.k, margin, max_depth)
    return BraidWord(loop.k, tuple(letters))


# ---------------------------------------------------------------------------
# determinant winding


def _frame_det(frame: np.ndarray) -> complex:
    diffs = frame[1:] - frame[0]
    return complex(np.linalg.det(diffs))


def _det_floor(frame: np.ndarray) -> float:
    diffs = frame[1:] - frame[0]
    norms = np.sqrt(np.sum(np.abs(diffs) ** 2, axis=1))
    hadamard = float(np.prod(np.maximum(norms, 1e-300)))
    return _DET_FLOOR * max(1.0, hadamard)


def det_winding(loop: ConfigLoop, *, tol: float = _SPAN_TOL, refine_budget: int = 1024) -> int:
    """Winding number around 0 of the determinant path of a full-span loop of
    k = n+1 points."""
    if loop.k != loop.n + 1:
        raise LoopError(f"det_winding needs k = n+1 points, got k={loop.k}, n={loop.n}")
    for t in range(loop.num_frames):
        if span_dimension(loop.frames[t], tol) != loop.n:
            raise DegenerateSpanError(f"frame {t} does not span dimension {loop.n}")
    budget = [refine_budget]

    def segment(a: np.ndarray, b: np.ndarray, det_a: complex, det_b: complex) -> float:
        delta = cmath.phase(det_b / det_a)
        if abs(delta) < math.pi / 2:
            return delta
        if budget[0] <= 0:
            raise LoopError("refinement budget exceeded while tracking the determinant")
        budget[0] -= 1
        mid = (a + b) / 2
        det_m = _frame_det(mid)
        if abs(det_m) < _det_floor(mid):
            raise DegenerateSpanError(
                "determinant dropped below the floor between frames"
            )
        return segment(a, mid, det_a, det_m) + segment(mid, b, det_m, det_b)

    dets = []
    for t in range(loop.num_frames):
        d = _frame_det(loop.frames[t])
        if abs(d) < _det_floor(loop.frames[t]):
            raise DegenerateSpanError(f"frame {t} determinant below the floor")
        dets.append(d)
    total = 0.0
    for t in range(loop.num_frames - 1):
        total += segment(loop.frames[t], loop.frames[t + 1], dets[t], dets[t + 1])
    return int(round(total / (2 * math.pi)))
