"""Exception types shared across the package."""


class ManeuverGenError(Exception):
    """Base class for all package-specific errors."""


# --- simulator ---

class EnvelopeViolation(ManeuverGenError):
    """Aerodynamic model evaluated outside its validity range."""


class NumericalDivergence(ManeuverGenError):
    """Integration produced a state outside sanity bounds."""


class TrimNotFound(ManeuverGenError):
    """Trim solver exhausted its budget or converged outside limits."""


# --- expert ---

class UnknownManeuver(ManeuverGenError):
    """Requested reference profile kind is not implemented."""


class InversionSingular(ManeuverGenError):
    """Control-effectiveness matrix too ill-conditioned to invert."""


class ExpertDiverged(ManeuverGenError):
    """Closed-loop expert rollout left the simulator's valid region."""


# --- neural core ---

class ShapeMismatch(ManeuverGenError):
    """Array shape does not match the network specification."""


class SpecMismatch(ManeuverGenError):
    """Checkpoint was written for a different network specification."""


class CorruptCheckpoint(ManeuverGenError):
    """Checkpoint file failed structural or checksum validation."""


# --- imitation ---

class InconsistentDt(ManeuverGenError):
    """Demonstrations mix different sample spacings."""


class EmptyDemos(ManeuverGenError):
    """No demonstrations supplied."""


class DemoTooShort(ManeuverGenError):
    """Demonstration shorter than one window plus target."""


class AllCandidatesUnstable(ManeuverGenError):
    """Every confidence-gain candidate diverged at every trim point."""


# --- reinforcement learning ---

class InsufficientFill(ManeuverGenError):
    """Replay buffer sampled before reaching its warmup fill."""


# --- harness ---

class LengthMismatch(ManeuverGenError):
    """Trajectory/reference lengths cannot be reconciled by padding."""


class ConfigError(ManeuverGenError):
    """Experiment configuration is invalid or unresolvable."""


class StageFailure(ManeuverGenError):
    """A pipeline stage failed; see the manifest for details."""
