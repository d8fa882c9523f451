"""Bridge-braid spectra.

A spectrum ``{b_0, ..., b_D}`` records, for each bridge count ``d``, the least
braid count of any representative with ``d`` critical pairs.  It decreases
strictly to a single terminal zero at ``d = D`` (the classical bridge index),
and ``b_0`` is the classical braid index.  Entries past ``D`` are zero and are
not stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import BadIndex, InvalidSpectrum

__all__ = [
    "Spectrum",
    "SpectrumViolation",
    "Concavity",
    "parse_spectrum",
    "spectrum_violations",
    "validate_spectrum",
    "two_bridge_spectrum",
    "bb_spectrum",
    "split_combine",
    "composite_combine",
    "is_concave",
]


@dataclass(frozen=True)
class SpectrumViolation:
    code: str  # NotDecreasing | MissingPenultimateOne | NoTerminalZero | NegativeEntry
    index: int | None

    def __str__(self):
        return self.code if self.index is None else f"{self.code} at d={self.index}"


@dataclass(frozen=True)
class Spectrum:
    """A validated spectrum; build one with :func:`validate_spectrum`."""

    values: tuple[int, ...]

    @property
    def bridge_index(self) -> int:
        return len(self.values) - 1

    @property
    def braid_index(self) -> int:
        return self.values[0]

    def at(self, d: int) -> int:
        """``b_d``, with zero beyond the bridge index."""
        if d < 0:
            raise BadIndex(f"negative bridge count {d}")
        return self.values[d] if d < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, d):
        return self.values[d]

    def __str__(self):
        return "{" + ",".join(str(v) for v in self.values) + "}"


_LITERAL = re.compile(r"\s*[{(\[]?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*[})\]]?\s*")


def parse_spectrum(text: str) -> Spectrum:
    """Parse the brace form ``{3,1,0}`` and validate it."""
    m = _LITERAL.fullmatch(text)
    if not m:
        raise ValueError(f"not a spectrum literal: {text!r}")
    return validate_spectrum(int(x) for x in m.group(1).split(","))


def _normalize(raw: Iterable[int]) -> tuple[list[int], int | None]:
    values = list(raw)
    first_zero = next((k for k, v in enumerate(values) if v == 0), None)
    return values, first_zero


def spectrum_violations(raw: Iterable[int]) -> list[SpectrumViolation]:
    values, zero = _normalize(raw)
    out = []
    for k, v in enumerate(values):
        if v < 0:
            out.append(SpectrumViolation("NegativeEntry", k))
            break
    if zero is None:
        out.append(SpectrumViolation("NoTerminalZero", None))
        head = values
    else:
        head = values[: zero + 1]
        tail = values[zero + 1:]
        bad_tail = next((zero + 1 + k for k, v in enumerate(tail) if v != 0), None)
    for d in range(1, len(head)):
        if head[d] >= head[d - 1]:
            out.append(SpectrumViolation("NotDecreasing", d))
            break
    else:
        if zero is not None and bad_tail is not None:
            out.append(SpectrumViolation("NotDecreasing", bad_tail))
    if zero is not None and zero >= 1 and head[zero - 1] != 1:
        out.append(SpectrumViolation("MissingPenultimateOne", zero - 1))
    return out


def validate_spectrum(raw: Iterable[int]) -> Spectrum:
    """Check the spectrum invariants, dropping zeros after the first.

    Raises :class:`InvalidSpectrum` carrying every violation found.
    """
    values = list(raw)
    problems = spectrum_violations(values)
    if problems:
        raise InvalidSpectrum(problems)
    return Spectrum(tuple(values[: values.index(0) + 1]))


def two_bridge_spectrum(braid_index: int) -> Spectrum:
    if braid_index < 2:
        raise BadIndex(f"a 2-bridge link has braid index >= 2, got {braid_index}")
    return Spectrum((braid_index, 1, 0))


def bb_spectrum(index: int) -> Spectrum:
    if index < 1:
        raise BadIndex(f"bridge index must be >= 1, got {index}")
    return Spectrum(tuple(range(index, -1, -1)))


def _ensure(s) -> Spectrum:
    return s if isinstance(s, Spectrum) else validate_spectrum(s)


def split_combine(s1, s2) -> Spectrum:
    """Spectrum of a split union: min-plus convolution of the two spectra."""
    s1, s2 = _ensure(s1), _ensure(s2)
    D = s1.bridge_index + s2.bridge_index
    out = [min(s1.at(d1) + s2.at(d - d1) for d1 in range(d + 1)) for d in range(D + 1)]
    return validate_spectrum(out)


def composite_combine(s1, s2) -> Spectrum:
    """Spectrum of a connected sum.

    Each summand must keep at least one critical pair, so the minimum runs
    over ``1 <= d_i <= D_i`` with ``d1 + d2 = d + 1``.
    """
    s1, s2 = _ensure(s1), _ensure(s2)
    D1, D2 = s1.bridge_index, s2.bridge_index
    if D1 < 1 or D2 < 1:
        raise InvalidSpectrum([SpectrumViolation("NoTerminalZero", 0)])
    D = D1 + D2 - 1
    out = [s1.braid_index + s2.braid_index - 1]
    for d in range(1, D):
        out.append(min(s1.at(d1) + s2.at(d + 1 - d1)
                       for d1 in range(max(1, d + 1 - D2), min(D1, d) + 1)))
    out.append(0)
    return validate_spectrum(out)


class Concavity(NamedTuple):
    concave: bool
    index: int | None


def is_concave(s) -> Concavity:
    """Whether ``b_{d-1} - b_d >= b_d - b_{d+1}`` everywhere; reports the first failing d."""
    s = _ensure(s)
    for d in range(1, s.bridge_index):
        if s[d - 1] - s[d] < s[d] - s[d + 1]:
            return Concavity(False, d)
    return Concavity(True, None)
