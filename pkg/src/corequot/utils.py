"""Shared utility functions"""

import re
from fractions import Fraction
from typing import Optional

from .exceptions import ValidationError
from .partitions import Partition, make_partition


def parse_partition(text: Optional[str]) -> Partition:
    """Parse the serialized form "4,3,1,1"; the empty string is the empty partition"""
    if text is None:
        return make_partition(())
    text = text.strip()
    if text in ("", "∅", "()"):
        return make_partition(())

    # Accept "(4,3,1,1)" and "4 3 1 1" as well as the canonical form
    text = text.strip("()[]")
    pieces = [p for p in re.split(r"[,\s]+", text) if p]
    for index, piece in enumerate(pieces):
        if not re.fullmatch(r"-?\d+", piece):
            raise ValidationError(f"part {piece!r} at index {index} is not an integer", index)
    return make_partition(int(p) for p in pieces)


def format_partition(p: Partition, pretty: bool = False) -> str:
    """Serialized form; pretty mode shows the empty partition as ∅"""
    if pretty and not p:
        return "∅"
    return str(p)


def format_rational(value) -> str:
    """Rationals always as "num/den" (integers without a denominator), never floats"""
    return str(Fraction(value))
