"""
Whitehead Move Models
=====================

The two kinds of Whitehead substitution and the record of a reduction run.

Kinds:
    PermutationMove: x_i -> x_{pi(i)}^{e_i}; a signed permutation of the
        generators. ``images[i - 1]`` is the signed code of the image of x_i.
    MultiplierMove: a fixed letter a (the multiplier) and, for every other
        generator x_i, one MoveAction:
            KEEP   x_i -> x_i
            RIGHT  x_i -> x_i a
            LEFT   x_i -> a^-1 x_i
            BOTH   x_i -> a^-1 x_i a
        The multiplier's own generator is fixed; its slot in ``actions``
        holds KEEP.

Both kinds replace x_i^-1 by the formal inverse of the image of x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from models.tangency_set import TangencySet
from models.word import format_code, format_codes


class MoveAction(Enum):
    KEEP = "keep"
    RIGHT = "right"
    LEFT = "left"
    BOTH = "both"

    @property
    def appends(self) -> bool:
        return self in (MoveAction.RIGHT, MoveAction.BOTH)

    @property
    def prepends(self) -> bool:
        return self in (MoveAction.LEFT, MoveAction.BOTH)


@dataclass(frozen=True)
class PermutationMove:
    """Signed permutation of the generators (Whitehead type 1)."""

    images: tuple[int, ...]

    kind = "permutation"

    @property
    def genus(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def image(self, index: int) -> tuple[int, ...]:
        """Image of generator x_index as a code sequence."""
        return (self.images[index - 1],)

    def substitute(self, code: int) -> tuple[int, ...]:
        img = self.images[abs(code) - 1]
        return (img,) if code > 0 else (-img,)

    def inverse(self) -> "PermutationMove":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[abs(img) - 1] = i if img > 0 else -i
        return PermutationMove(tuple(inv))

    def describe(self) -> str:
        parts = [f"x{i} -> {format_code(img)}"
                 for i, img in enumerate(self.images, start=1) if img != i]
        return ", ".join(parts) if parts else "identity"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "images": [format_code(c) for c in self.images]}

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class MultiplierMove:
    """Multiplier substitution (Whitehead type 2) fixing the letter ``multiplier``."""

    multiplier: int
    actions: tuple[MoveAction, ...]

    kind = "multiplier"

    @property
    def genus(self) -> int:
        return len(self.actions)

    def is_identity(self) -> bool:
        return all(a is MoveAction.KEEP for a in self.actions)

    def image(self, index: int) -> tuple[int, ...]:
        """Image of generator x_index as a code sequence."""
        a = self.multiplier
        if index == abs(a):
            return (index,)
        action = self.actions[index - 1]
        head = (-a,) if action.prepends else ()
        tail = (a,) if action.appends else ()
        return head + (index,) + tail

    def substitute(self, code: int) -> tuple[int, ...]:
        a = self.multiplier
        if abs(code) == abs(a):
            return (code,)
        if code > 0:
            return self.image(code)
        # (a^-1 x a)^-1 = a^-1 x^-1 a, (x a)^-1 = a^-1 x^-1, (a^-1 x)^-1 = x^-1 a
        action = self.actions[-code - 1]
        head = (-a,) if action.appends else ()
        tail = (a,) if action.prepends else ()
        return head + (code,) + tail

    def inverse(self) -> "MultiplierMove":
        return MultiplierMove(-self.multiplier, self.actions)

    def describe(self) -> str:
        images = [f"x{i} -> {format_codes(self.image(i))}"
                  for i, act in enumerate(self.actions, start=1)
                  if i != abs(self.multiplier) and act is not MoveAction.KEEP]
        return f"a = {format_code(self.multiplier)}: " + ", ".join(images)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "multiplier": format_code(self.multiplier),
            "actions": {str(i): act.value for i, act in enumerate(self.actions, start=1)
                        if i != abs(self.multiplier)},
        }

    def __str__(self) -> str:
        return self.describe()


WhiteheadMove = Union[PermutationMove, MultiplierMove]


@dataclass(frozen=True)
class ReductionStep:
    move: WhiteheadMove
    result: TangencySet
    length: int


@dataclass(frozen=True)
class ReductionTrace:
    """
    Ordered record of the moves applied by a Whitehead reduction.

    Lengths strictly decrease along the trace.
    """

    initial_length: int
    steps: tuple[ReductionStep, ...] = ()

    @property
    def lengths(self) -> list[int]:
        """Length profile, starting with the initial length."""
        return [self.initial_length] + [step.length for step in self.steps]

    def to_dict(self) -> list[dict]:
        return [{"move": step.move.describe(), "length_after": step.length} for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"ReductionTrace(lengths={self.lengths})"
