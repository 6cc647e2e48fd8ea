"""Edge labelings, path weights, and the Leech / almost / neither classifier."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EdgeIdOutOfRangeError,
    LabelCountMismatchError,
    NonPositiveLabelError,
)
from .graph import GeodesicPath, Graph, enumerate_geodesics


class Verdict(enum.Enum):
    GEODESIC_LEECH = "leech"
    ALMOST_GEODESIC_LEECH = "almost"
    NEITHER = "neither"


@dataclass(frozen=True)
class Labeling:
    """Positive integer labels indexed by edge id."""

    labels: tuple[int, ...]

    def __post_init__(self):
        bad = [x for x in self.labels if x < 1]
        if bad:
            raise NonPositiveLabelError(f"labels must be >= 1, got {bad}")

    @property
    def total(self) -> int:
        return sum(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class ClassificationReport:
    """Verdict plus the weight-multiset diagnostics behind it.

    missing lists the values of 1..t_gp absent from the multiset; duplicates
    lists (value, multiplicity) for every value occurring more than once;
    overshoot lists the distinct weights above t_gp.
    """

    verdict: Verdict
    t_gp: int
    weight_multiset: tuple[int, ...]
    missing: tuple[int, ...]
    duplicates: tuple[tuple[int, int], ...]
    overshoot: tuple[int, ...]


def path_weight(lab: Labeling, p: GeodesicPath) -> int:
    """Sum of the labels on the path's edges."""
    total = 0
    for eid in p.edge_ids:
        if eid >= len(lab.labels):
            raise EdgeIdOutOfRangeError(
                f"path uses edge id {eid} but labeling has {len(lab.labels)} labels"
            )
        total += lab.labels[eid]
    return total


def as_labeling(labels) -> Labeling:
    if isinstance(labels, Labeling):
        return labels
    return Labeling(tuple(labels))


def classify(g: Graph, lab: Labeling | Sequence[int]) -> ClassificationReport:
    """Classify a labeling as geodesic Leech, almost geodesic Leech, or neither.

    Geodesic Leech means the multiset of geodesic weights is exactly
    {1, ..., t_gp}. Almost means exactly one of those values is missing,
    exactly one weight occurs exactly twice, and nothing exceeds t_gp.
    A value of multiplicity three or more is never almost.

    t_gp is always recomputed from enumeration, never from closed forms, so
    the classifier stays correct on arbitrary input graphs.
    """
    lab = as_labeling(lab)
    if len(lab.labels) != g.edge_count:
        raise LabelCountMismatchError(
            f"labeling has {len(lab.labels)} labels but graph has {g.edge_count} edges"
        )
    paths = enumerate_geodesics(g)
    t_gp = len(paths)
    weights = sorted(path_weight(lab, p) for p in paths)
    counts = Counter(weights)
    missing = tuple(v for v in range(1, t_gp + 1) if v not in counts)
    duplicates = tuple((v, c) for v, c in sorted(counts.items()) if c > 1)
    overshoot = tuple(sorted(v for v in counts if v > t_gp))

    if weights == list(range(1, t_gp + 1)):
        verdict = Verdict.GEODESIC_LEECH
    elif (
        len(missing) == 1
        and len(duplicates) == 1
        and duplicates[0][1] == 2
        and not overshoot
    ):
        verdict = Verdict.ALMOST_GEODESIC_LEECH
    else:
        verdict = Verdict.NEITHER
    return ClassificationReport(
        verdict=verdict,
        t_gp=t_gp,
        weight_multiset=tuple(weights),
        missing=missing,
        duplicates=duplicates,
        overshoot=overshoot,
    )
