"""Text syntax for elements, families, words and endomorphisms.

    element  := "0" | "(" INT "," INT ",[" INT "))"
    family   := "{" set ("," set)* "}"      set := "[" INT ")" | "empty"
    word     := ("p" | "q")+ | "1"
    endo     := "alpha:" INT "," INT | "beta:" INT "," INT
              | "gamma:" INT | "delta:" INT | "zero"

Whitespace is ignored everywhere. The ``)`` closing ``[n)`` is unbalanced
on purpose; it is the half-open interval, not a bracket pair.
"""

from __future__ import annotations

from .endo import ZERO_ENDO, Alpha, Beta, Delta, Gamma, MonoidEndo
from .omega import EMPTY, Family, FamilyError, OmegaSet, Tail
from .semigroup import ZERO, Element, Triple


class ParseError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(f"at position {position} of {text!r}: expected {expected}, found {found}")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: str):
        self._skip()
        raise ParseError(self.text, self.pos, expected)

    def expect(self, token: str):
        for ch in token:
            if self.peek() != ch:
                self.fail(repr(token))
            self.pos += 1

    def accept(self, token: str) -> bool:
        save = self.pos
        for ch in token:
            if self.peek() != ch:
                self.pos = save
                return False
            self.pos += 1
        return True

    def integer(self) -> int:
        if not self.peek().isdigit():
            self.fail("a non-negative integer")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def end(self):
        if self.peek():
            self.fail("end of input")


def _run(text: str, rule):
    cur = _Cursor(text)
    value = rule(cur)
    cur.end()
    return value


def _tail(cur: _Cursor) -> Tail:
    cur.expect("[")
    n = cur.integer()
    cur.expect(")")
    return Tail(n)


def _element(cur: _Cursor) -> Element:
    if cur.accept("0"):
        return ZERO
    cur.expect("(")
    i = cur.integer()
    cur.expect(",")
    j = cur.integer()
    cur.expect(",")
    f = _tail(cur)
    cur.expect(")")
    return Triple(i, j, f)


def _set(cur: _Cursor) -> OmegaSet:
    if cur.accept("empty"):
        return EMPTY
    if cur.peek() != "[":
        cur.fail("'[' or 'empty'")
    return _tail(cur)


def _family(cur: _Cursor) -> Family:
    start = cur.pos
    cur.expect("{")
    members = [_set(cur)]
    while cur.accept(","):
        members.append(_set(cur))
    cur.expect("}")
    try:
        return Family(members)
    except FamilyError as exc:
        raise ParseError(cur.text, start, f"an omega-closed family containing [0) ({exc})") from None


def _word(cur: _Cursor) -> str:
    if cur.accept("1"):
        return ""
    letters = []
    while cur.peek() in ("p", "q"):
        letters.append(cur.peek())
        cur.pos += 1
    if not letters:
        cur.fail("'p', 'q' or '1'")
    return "".join(letters)


def _endo(cur: _Cursor) -> MonoidEndo:
    start = cur.pos
    if cur.accept("zero"):
        return ZERO_ENDO
    for name, cls, arity in (("alpha", Alpha, 2), ("beta", Beta, 2), ("gamma", Gamma, 1), ("delta", Delta, 1)):
        if cur.accept(name):
            cur.expect(":")
            args = [cur.integer()]
            if arity == 2:
                cur.expect(",")
                args.append(cur.integer())
            try:
                return cls(*args)
            except ValueError as exc:
                raise ParseError(cur.text, start, f"parameters in range ({exc})") from None
    cur.fail("'alpha:', 'beta:', 'gamma:', 'delta:' or 'zero'")


def parse_element(text: str) -> Element:
    return _run(text, _element)


def parse_family(text: str) -> Family:
    return _run(text, _family)


def parse_word(text: str) -> str:
    """Return the word as a plain ``p``/``q`` string; ``"1"`` is the empty word."""
    return _run(text, _word)


def parse_endo(text: str) -> MonoidEndo:
    return _run(text, _endo)


def format_word(word: str) -> str:
    return word or "1"


def format_pair(pair: tuple) -> str:
    return "(" + ",".join(map(str, pair)) + ")"
