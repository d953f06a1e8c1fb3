"""Training-set construction: 18-feature rows, [0,1] normalization, windows.

Feature order per sample: the 12 rigid-body states, computed normal
acceleration a_n (g units), the 4 executed commands, and time.  Each row's
action target is the next sample's command within the same demonstration
(the final row targets itself; no window ever reads it).  Normalization is
per-feature min/max over the dataset; action targets share the stats of
the corresponding command feature columns so that predictions in (0,1)
de-normalize to control units.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DemoTooShort, EmptyDemos, InconsistentDt
from ..expert.rollout import Demonstration
from ..simdyn.types import ControlInput

FEATURE_NAMES = (
    "vt_fts", "alpha_rad", "beta_rad", "phi_rad", "theta_rad", "psi_rad",
    "p_rps", "q_rps", "r_rps", "pn_ft", "pe_ft", "pd_ft",
    "an_g", "throttle", "elevator_deg", "aileron_deg", "rudder_deg", "t_s",
)
N_FEATURES = len(FEATURE_NAMES)
CONTROL_SLICE = slice(13, 17)
DEFAULT_GRAVITY = 32.17


def normal_acceleration(states, gravity=DEFAULT_GRAVITY):
    """a_n in g units: pitch-rate lift term minus the body-z gravity
    component, (Q*Vt - (-g cos(theta) cos(phi))) / g."""
    q, vt = states[:, 7], states[:, 0]
    return q * vt / gravity + np.cos(states[:, 4]) * np.cos(states[:, 3])


def features_from_demo(demo: Demonstration, gravity=DEFAULT_GRAVITY):
    """Raw (unnormalized) N x 18 feature matrix of a demonstration."""
    n = len(demo)
    out = np.empty((n, N_FEATURES))
    out[:, 0:12] = demo.states[:, 0:12]
    out[:, 12] = normal_acceleration(demo.states, gravity)
    out[:, 13:17] = demo.commands
    out[:, 17] = demo.times
    return out


@dataclass(frozen=True)
class NormStats:
    """Per-feature min/max; constant features are flagged and map to 0."""

    mins: np.ndarray
    maxs: np.ndarray
    constant: np.ndarray  # bool per feature

    @classmethod
    def fit(cls, raw):
        mins = raw.min(axis=0)
        maxs = raw.max(axis=0)
        constant = maxs <= mins
        return cls(mins=mins, maxs=maxs, constant=constant)

    def normalize(self, raw):
        span = np.where(self.constant, 1.0, self.maxs - self.mins)
        out = (raw - self.mins) / span
        if self.constant.any():
            out[..., self.constant] = 0.0
        return out

    def normalize_action(self, cmd4):
        mins = self.mins[CONTROL_SLICE]
        maxs = self.maxs[CONTROL_SLICE]
        const = self.constant[CONTROL_SLICE]
        span = np.where(const, 1.0, maxs - mins)
        out = (np.asarray(cmd4, dtype=np.float64) - mins) / span
        out = np.where(const, 0.0, out)
        return out

    def denormalize_action(self, pred4):
        mins = self.mins[CONTROL_SLICE]
        maxs = self.maxs[CONTROL_SLICE]
        const = self.constant[CONTROL_SLICE]
        return np.where(const, mins, mins + np.asarray(pred4) * (maxs - mins))

    def to_dict(self):
        return {"mins": self.mins.tolist(), "maxs": self.maxs.tolist(),
                "constant": self.constant.astype(int).tolist(),
                "features": list(FEATURE_NAMES)}

    @classmethod
    def from_dict(cls, d):
        return cls(mins=np.array(d["mins"]), maxs=np.array(d["maxs"]),
                   constant=np.array(d["constant"], dtype=bool))


@dataclass
class Dataset:
    """Normalized sample matrix with aligned action targets and provenance."""

    samples: np.ndarray          # (N, 18) normalized
    targets: np.ndarray          # (N, 4) normalized next-step commands
    stats: NormStats
    dt: float
    demo_bounds: list            # (start, length) per demonstration
    demo_ids: list

    def __len__(self):
        return len(self.samples)

    def append_rows(self, raw_features, raw_targets, demo_id):
        """Append a demonstration's rows normalized with the frozen stats."""
        start = len(self.samples)
        self.samples = np.concatenate(
            [self.samples, self.stats.normalize(raw_features)])
        self.targets = np.concatenate(
            [self.targets, self.stats.normalize_action(raw_targets)])
        self.demo_bounds.append((start, len(raw_features)))
        self.demo_ids.append(demo_id)
        return start


def _raw_targets(features_raw):
    """Next-row command for every row; the final row targets itself."""
    t = features_raw[:, CONTROL_SLICE].copy()
    t[:-1] = t[1:]
    return t


def build_dataset(demos, gravity=DEFAULT_GRAVITY) -> Dataset:
    """Concatenate demonstrations into a normalized training matrix."""
    demos = list(demos)
    if not demos:
        raise EmptyDemos("no demonstrations supplied")
    dt = demos[0].dt
    for d in demos:
        if not math.isclose(d.dt, dt, rel_tol=0.0, abs_tol=1e-12):
            raise InconsistentDt(f"demo dt {d.dt} != {dt}")
    feats = [features_from_demo(d, gravity) for d in demos]
    raw = np.concatenate(feats)
    stats = NormStats.fit(raw)
    targets = np.concatenate([_raw_targets(f) for f in feats])
    bounds = []
    start = 0
    for f in feats:
        bounds.append((start, len(f)))
        start += len(f)
    return Dataset(samples=stats.normalize(raw),
                   targets=stats.normalize_action(targets),
                   stats=stats, dt=dt, demo_bounds=bounds,
                   demo_ids=[f"{d.maneuver}@{d.trim_vt:.0f}/{d.trim_alt:.0f}"
                             for d in demos])


SPLIT_TRAIN, SPLIT_VAL, SPLIT_TEST = 0, 1, 2
SPLIT_FRACTIONS = (0.70, 0.25, 0.05)


def _assign_splits(n, rng, fractions=SPLIT_FRACTIONS):
    n_train = int(n * fractions[0])
    n_val = int(n * fractions[1])
    labels = np.full(n, SPLIT_TEST, dtype=np.int8)
    perm = rng.permutation(n)
    labels[perm[:n_train]] = SPLIT_TRAIN
    labels[perm[n_train:n_train + n_val]] = SPLIT_VAL
    return labels


@dataclass
class WindowedDataset:
    """Sliding windows over a Dataset, referenced by start row (no copies)."""

    dataset: Dataset
    window: int
    starts: np.ndarray           # (M,) global row index of each window start
    targets: np.ndarray          # (M, 4) normalized action targets
    splits: np.ndarray           # (M,) int8 split labels

    def __len__(self):
        return len(self.starts)

    def split_indices(self, which):
        return np.nonzero(self.splits == which)[0]

    def batch(self, idx):
        rows = self.starts[idx][:, None] + np.arange(self.window)[None, :]
        return self.dataset.samples[rows], self.targets[idx]

    def append_windows(self, starts, targets, rng, fractions=SPLIT_FRACTIONS):
        starts = np.asarray(starts, dtype=np.int64)
        self.starts = np.concatenate([self.starts, starts])
        self.targets = np.concatenate([self.targets, np.asarray(targets)])
        self.splits = np.concatenate(
            [self.splits, _assign_splits(len(starts), rng, fractions)])


def make_windows(dataset: Dataset, window: int = 50, stride: int = 1,
                 seed: int = 0, fractions=SPLIT_FRACTIONS) -> WindowedDataset:
    """Build per-demo sliding windows with a seeded 70/25/5 split.

    Window k of a demo covers samples [k, k+W); its target is the action
    executed at sample k+W (stored on row k+W-1).  Windows never cross
    demonstration boundaries.
    """
    starts = []
    targets = []
    for start, length in dataset.demo_bounds:
        if length < window + 1:
            raise DemoTooShort(
                f"demo of {length} samples cannot host a {window}-window")
        for k in range(0, length - window, stride):
            starts.append(start + k)
            targets.append(dataset.targets[start + k + window - 1])
    starts = np.asarray(starts, dtype=np.int64)
    targets = np.asarray(targets)
    rng = np.random.default_rng(seed)
    return WindowedDataset(dataset=dataset, window=window, starts=starts,
                           targets=targets,
                           splits=_assign_splits(len(starts), rng, fractions))


def windows_from_rollout(dataset: Dataset, raw_features, expert_commands,
                         window: int, demo_id: str):
    """Window a rollout's raw features, labeling every window with the
    expert's command at the window end (the DAgger aggregation rule).

    Returns (starts, targets) ready for WindowedDataset.append_windows.
    """
    n = len(raw_features)
    if n < window + 1:
        return np.empty(0, dtype=np.int64), np.empty((0, 4))
    raw_t = np.asarray(expert_commands, dtype=np.float64)[window:]
    tgt = dataset.stats.normalize_action(raw_t)
    base = dataset.append_rows(raw_features, _raw_targets(raw_features), demo_id)
    starts = base + np.arange(n - window, dtype=np.int64)
    return starts, tgt
