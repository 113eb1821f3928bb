"""Plain record types shared by the fast paths and the oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .words import Word


@dataclass(frozen=True)
class SwitchRecord:
    """A factor a·u·b with u a palindrome and a != b."""

    left: int
    core: Word
    right: int

    @property
    def word(self) -> Word:
        q = max(self.core.alphabet_size, self.left + 1, self.right + 1)
        return Word(chr(self.left) + self.core.chars + chr(self.right), q)

    def to_json_dict(self) -> dict:
        return {
            "left": Word.from_symbols([self.left]).text,
            "core": self.core.text,
            "right": Word.from_symbols([self.right]).text,
            "word": self.word.text,
        }


class SwitchPair(NamedTuple):
    """A palindromic core plus one of the letters it can be wrapped with."""

    core: Word
    letter: int

    def to_json_dict(self) -> dict:
        return {"core": self.core.text, "letter": Word.from_symbols([self.letter]).text}
