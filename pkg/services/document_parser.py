"""
Document Parser - Tangency Data Files
=====================================

This module reads and writes the plain-text tangency document format.

Format:
    # comments run to the end of the line
    genus 2                 first significant line
    x1 x2 x1 x2 x2          token form: x<k> or x<k>^-1, whitespace-separated
    abABB                   compact form: a..z = x1..x26, A..Z = inverses
    1                       the empty word (an inessential t-curve)

Every significant line after the header is one word. A word line must
use a single notation; compact words are one contiguous token.

Errors carry ``source:line:column`` positions (1-based).

Usage:
    doc = parse(text, source="fig.txt")
    s = to_tangency_set(doc)
    render(document_from_set(s))
"""

from __future__ import annotations

import logging
import re
import sys
from pathlib import Path
from typing import Optional

from models.input_document import InputDocument
from models.tangency_set import TangencySet
from models.word import Word, format_codes
from services.errors import IndexOutOfRange, MalformedWord, MissingGenus
from services.word_service import make_tangency_set

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)

_GENUS = re.compile(r"\s*genus\s+(\S+)\s*$")
_GENUS_WORD = re.compile(r"\s*(genus)(?:\s|$)")
_TOKEN = re.compile(r"x([0-9]+)(\^-1)?")
_DIGITS = re.compile(r"[0-9]+")
_COMPACT = re.compile(r"[A-Za-z]+")
_SPLIT = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _parse_token(token: str, genus: int, line_no: int, column: int, source: str) -> int:
    match = _TOKEN.fullmatch(token)
    if match is None:
        raise MalformedWord(f"bad token {token!r}", line_no, column, source)
    index = int(match.group(1))
    if index < 1:
        raise MalformedWord(f"generator index must be >= 1 in {token!r}", line_no, column, source)
    if index > genus:
        raise IndexOutOfRange(index, genus, line_no, column, source)
    return -index if match.group(2) else index


def _parse_compact(token: str, genus: int, line_no: int, column: int, source: str) -> list[int]:
    codes = []
    for offset, ch in enumerate(token):
        index = ord(ch.lower()) - ord("a") + 1
        if index > genus:
            raise IndexOutOfRange(index, genus, line_no, column + offset, source)
        codes.append(-index if ch.isupper() else index)
    return codes


def parse_word_line(text: str, genus: int, line_no: Optional[int] = None,
                    source: Optional[str] = None) -> Word:
    """
    Decode one word line.

    Raises:
        MalformedWord: bad token, mixed notations or several compact tokens
        IndexOutOfRange: a generator above genus
    """
    tokens = [(m.group(0), m.start() + 1) for m in _SPLIT.finditer(text)]
    if len(tokens) == 1 and tokens[0][0] == "1":
        return Word()
    compact = sum(1 for t, _ in tokens if _COMPACT.fullmatch(t) and not _TOKEN.fullmatch(t))
    if compact:
        if len(tokens) > 1:
            token, column = tokens[1]
            if compact < len(tokens):
                raise MalformedWord(f"mixed token and compact notation at {token!r}", line_no, column, source)
            raise MalformedWord(f"compact word must be a single token, found {token!r}",
                                line_no, column, source)
        token, column = tokens[0]
        return Word(tuple(_parse_compact(token, genus, line_no, column, source)))
    return Word(tuple(_parse_token(token, genus, line_no, column, source) for token, column in tokens))


def parse(text: str, source: str = "<string>") -> InputDocument:
    """
    Parse a tangency document.

    Args:
        text: document contents
        source: name used in error positions

    Returns:
        InputDocument: genus, word lines as written and decoded words

    Raises:
        MissingGenus: the first significant line is not a genus header
        MalformedWord: an unreadable genus value, a second genus line or a bad word
        IndexOutOfRange: a generator above the genus
    """
    genus: Optional[int] = None
    lines: list[str] = []
    words: list[Word] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        header = _GENUS.match(line)
        if genus is None:
            if header is None:
                raise MissingGenus(source, line_no)
            value = header.group(1)
            if _DIGITS.fullmatch(value) is None:
                raise MalformedWord(f"genus must be a nonnegative integer, got {value!r}",
                                    line_no, header.start(1) + 1, source)
            genus = int(value)
            continue
        stray = _GENUS_WORD.match(line)
        if stray is not None:
            raise MalformedWord("unexpected second genus line", line_no, stray.start(1) + 1, source)
        words.append(parse_word_line(line, genus, line_no, source))
        lines.append(line.strip())
    if genus is None:
        raise MissingGenus(source)
    logger.debug("parse: %s genus %d, %d words", source, genus, len(words))
    return InputDocument(genus, tuple(lines), tuple(words), source)


def load(path: str) -> InputDocument:
    """
    Read and parse a document file; ``-`` reads standard input.

    Raises:
        OSError: the file cannot be read
        TangencyError: as parse
    """
    if path == "-":
        return parse(sys.stdin.read(), source="<stdin>")
    return parse(Path(path).read_text(encoding="utf-8"), source=path)


def to_tangency_set(document: InputDocument) -> TangencySet:
    return make_tangency_set(document.genus, document.parsed)


def render(document: InputDocument) -> str:
    """Canonical text of a document: header, then one token-form word per line."""
    lines = [f"genus {document.genus}"]
    lines.extend(format_codes(w.codes) for w in document.parsed)
    return "\n".join(lines) + "\n"


def document_from_set(s: TangencySet, source: str = "<generated>") -> InputDocument:
    """Canonical document of a set: its reduced words, then one ``1`` per inessential curve."""
    parsed = tuple(w.as_word() for w in s.reduced) + (Word(),) * s.inessential_count
    return InputDocument(s.genus, tuple(format_codes(w.codes) for w in parsed), parsed, source)
