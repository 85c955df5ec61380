"""
Verdict Models
==============

The decision record produced by the criterion pipeline.

Attributes:
    OccurrenceReport.counts (tuple[tuple[int, int], ...]): per generator
        index i (1-based position), the number of x_i and of x_i^-1 across
        the cyclically reduced words
    Verdict.genus (int): handlebody genus
    Verdict.input_set (TangencySet): the words as given
    Verdict.s_min (TangencySet): the Whitehead-minimal form
    Verdict.trace (ReductionTrace): moves taken by the reduction
    Verdict.occurrences (OccurrenceReport): letter counts in s_min
    Verdict.criterion_holds (bool): whether s_min satisfies condition (A)
    Verdict.interpretation (Interpretation): dynamical reading of the answer
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from models.tangency_set import TangencySet
from models.whitehead_move import ReductionTrace


class Interpretation(str, Enum):
    """What the boundary data licenses about the maximal invariant set K."""

    NONTRIVIAL_H1 = "NONTRIVIAL_H1"
    INCONCLUSIVE_REALIZABLE = "INCONCLUSIVE_REALIZABLE"

    @classmethod
    def from_criterion(cls, criterion_holds: bool) -> "Interpretation":
        return cls.INCONCLUSIVE_REALIZABLE if criterion_holds else cls.NONTRIVIAL_H1

    @property
    def description(self) -> str:
        if self is Interpretation.NONTRIVIAL_H1:
            return ("criterion fails: every flow realizing this block isolates a maximal "
                    "invariant set K with nontrivial one-dimensional Cech cohomology")
        return ("criterion holds: some flow realizes this block with K a single rest point; "
                "nothing can be concluded about the cohomology of K")


@dataclass(frozen=True)
class OccurrenceReport:
    """Per-generator counts of x_i and x_i^-1."""

    counts: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return len(self.counts)

    def positive(self, index: int) -> int:
        return self.counts[index - 1][0]

    def negative(self, index: int) -> int:
        return self.counts[index - 1][1]

    def crossings(self, index: int) -> int:
        """Points where the index-th cut disk meets the tangency curves."""
        pos, neg = self.counts[index - 1]
        return pos + neg

    def satisfies_a(self) -> bool:
        return all(pair in ((0, 0), (1, 1)) for pair in self.counts)

    def to_dict(self) -> dict:
        """
        Convert to the JSON occurrence table.

        Returns:
            dict: {"<i>": {"pos": n, "neg": m}} in generator order
        """
        return {str(i): {"pos": pos, "neg": neg} for i, (pos, neg) in enumerate(self.counts, start=1)}

    def __repr__(self) -> str:
        return f"OccurrenceReport({self.to_dict()})"


@dataclass(frozen=True)
class Verdict:
    """Full decision record for one tangency set."""

    genus: int
    input_set: TangencySet
    s_min: TangencySet
    trace: ReductionTrace
    occurrences: OccurrenceReport
    criterion_holds: bool

    @property
    def interpretation(self) -> Interpretation:
        return Interpretation.from_criterion(self.criterion_holds)

    def to_dict(self) -> dict:
        """
        Convert to the machine-readable document, keys in fixed order.

        Returns:
            dict: genus, input_words, s_min, trace, occurrences,
            criterion_holds, interpretation
        """
        return {
            "genus": self.genus,
            "input_words": [str(w) for w in self.input_set.raw_words],
            "s_min": [str(w) for w in self.s_min.reduced],
            "trace": self.trace.to_dict(),
            "occurrences": self.occurrences.to_dict(),
            "criterion_holds": self.criterion_holds,
            "interpretation": self.interpretation.value,
        }

    def __repr__(self) -> str:
        return (f"Verdict(genus={self.genus}, s_min={self.s_min}, "
                f"criterion_holds={self.criterion_holds}, interpretation={self.interpretation.value})")
