"""Maneuver-generation pilot models for agile fixed-wing aircraft.

Pipeline: synthetic-expert data generation on a 6-DOF simulator, behavior
cloning with confidence-gated dataset aggregation, transfer to a
parameter-perturbed airframe via layer freezing, and additive TD3
reinforcement learning for adaptation to further parameter changes.
"""

__version__ = "0.1.0"
