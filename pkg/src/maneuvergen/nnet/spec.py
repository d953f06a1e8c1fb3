"""Network architecture description and its stable hash."""

import hashlib
import json
from dataclasses import dataclass, field

ACTION_DIM = 4


@dataclass(frozen=True)
class NetworkSpec:
    """Composite recurrent autoencoder: encoder LSTM stack compressing a
    window of features into a latent vector, a decoder LSTM stack
    reconstructing the window from the repeated latent, and a dense
    prediction head mapping the latent to 4 saturated control outputs."""

    window: int = 50
    features: int = 18
    encoder: tuple = (64,)
    decoder: tuple = (64,)
    head: tuple = (32, ACTION_DIM)

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window length must be >= 1")
        if self.features < 1:
            raise ValueError("feature count must be >= 1")
        for group in (self.encoder, self.decoder, self.head):
            if len(group) == 0 or any(s < 1 for s in group):
                raise ValueError("layer sizes must be >= 1")
        if self.head[-1] != ACTION_DIM:
            raise ValueError(f"prediction head must end in {ACTION_DIM} outputs")
        # normalize list inputs from config files
        object.__setattr__(self, "encoder", tuple(int(s) for s in self.encoder))
        object.__setattr__(self, "decoder", tuple(int(s) for s in self.decoder))
        object.__setattr__(self, "head", tuple(int(s) for s in self.head))

    @property
    def latent(self):
        return self.encoder[-1]

    def canonical_json(self):
        return json.dumps({
            "window": self.window,
            "features": self.features,
            "encoder": list(self.encoder),
            "decoder": list(self.decoder),
            "head": list(self.head),
        }, sort_keys=True)

    def spec_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()

    def to_dict(self):
        return json.loads(self.canonical_json())

    @classmethod
    def from_dict(cls, d):
        return cls(window=d["window"], features=d["features"],
                   encoder=tuple(d["encoder"]), decoder=tuple(d["decoder"]),
                   head=tuple(d["head"]))
