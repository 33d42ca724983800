"""Report dataclasses returned by the verification routines.

Checks never assert; they return one of these so callers (tests, the
CLI, scripts) decide what a failure means.  Large integers serialize as
decimal strings.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ReciprocityReport:
    """Outcome of one counting-versus-polynomial comparison."""

    identity: str
    params: dict
    count: int
    poly_side: int
    equal: bool
    strata: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: v for k, v in self.params.items()},
            "count": str(self.count),
            "poly_side": str(self.poly_side),
            "equal": self.equal,
        }
        if self.strata is not None:
            out["strata"] = {str(k): str(v) for k, v in sorted(self.strata.items())}
        return out


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an identity verification that compares whole objects
    (series or symmetric functions) rather than a single count."""

    identity: str
    params: dict
    equal: bool
    details: tuple[str, ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: v for k, v in self.params.items()},
            "equal": self.equal,
            "details": list(self.details),
        }
