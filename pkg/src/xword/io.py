"""Line-oriented text formats for instances and solutions.

Instance file::

    XW 1
    alphabet ab
    weight a 1
    weight b 2
    reuse true
    slot h1 H 1 1 2
    slot v1 V 1 1 2
    prefill 1 1 b
    word ab
    word bb

Solution file: one ``assign <slot> <word>`` or ``empty <slot>`` line per slot.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .core import (
    EMPTY,
    Alphabet,
    Dictionary,
    Instance,
    Slot,
    UnknownSlot,
    UnknownWord,
    ValidationError,
    XwordError,
    normalize,
    validate_grid,
)

HEADER = "XW 1"


class ParseError(XwordError):
    """Malformed input line (the format-level syntax error)."""


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", line=no) from None


def parse_instance(text: str) -> Instance:
    seen_header = False
    letters: Optional[str] = None
    weights: dict[str, int] = {}
    weight_lines: dict[str, int] = {}
    reuse = True
    slots: list[Slot] = []
    slot_lines: dict[str, int] = {}
    prefills: dict[tuple[int, int], str] = {}
    prefill_lines: dict[tuple[int, int], int] = {}
    words: list[str] = []
    word_lines: list[int] = []
    for no, toks in _lines(text):
        kw = toks[0]
        if not seen_header:
            if toks != ["XW", "1"]:
                raise ParseError(f"expected header {HEADER!r}", line=no)
            seen_header = True
            continue
        if kw == "alphabet":
            if letters is not None:
                raise ParseError("duplicate alphabet line", line=no)
            if len(toks) < 2:
                raise ParseError("alphabet needs symbols", line=no)
            letters = "".join(toks[1:])
        elif kw == "weight":
            if len(toks) != 3 or len(toks[1]) != 1:
                raise ParseError("expected: weight <symbol> <int>", line=no)
            w = _int(toks[2], no)
            if w < 0:
                raise ParseError("weights must be non-negative", line=no)
            if toks[1] in weights:
                raise ParseError(f"duplicate weight for {toks[1]!r}", line=no)
            weights[toks[1]] = w
            weight_lines[toks[1]] = no
        elif kw == "reuse":
            if len(toks) != 2 or toks[1] not in ("true", "false"):
                raise ParseError("expected: reuse true|false", line=no)
            reuse = toks[1] == "true"
        elif kw == "slot":
            if len(toks) != 6:
                raise ParseError("expected: slot <id> H|V <row> <col> <len>", line=no)
            sid, orient = toks[1], toks[2]
            if orient not in ("H", "V"):
                raise ParseError(f"bad orientation {orient!r}", line=no)
            row, col, length = (_int(t, no) for t in toks[3:6])
            try:
                slots.append(Slot(sid, orient, row, col, length))
            except XwordError as e:
                e.line = no
                raise
            slot_lines[sid] = no
        elif kw == "prefill":
            if len(toks) != 4 or len(toks[3]) != 1:
                raise ParseError("expected: prefill <row> <col> <symbol>", line=no)
            cell = (_int(toks[1], no), _int(toks[2], no))
            if cell in prefills:
                raise ParseError(f"duplicate prefill at {cell}", line=no)
            prefills[cell] = toks[3]
            prefill_lines[cell] = no
        elif kw == "word":
            if len(toks) != 2:
                raise ParseError("expected: word <letters>", line=no)
            words.append(toks[1])
            word_lines.append(no)
        else:
            raise ParseError(f"unknown directive {kw!r}", line=no)
    if not seen_header:
        raise ParseError(f"missing header {HEADER!r}", line=1)
    if letters is None:
        raise ParseError("missing alphabet line", line=1)

    try:
        alphabet = Alphabet(letters, weights)
    except XwordError as e:
        bad = next((c for c in weights if c not in letters), None)
        e.line = weight_lines.get(bad) if bad else None
        raise
    try:
        grid = validate_grid(slots)
    except XwordError as e:
        e.line = _line_of_slot(e, slots, slot_lines)
        raise
    for cell, ch in prefills.items():
        if ch not in alphabet:
            raise ValidationError(f"prefill {ch!r} outside the alphabet", line=prefill_lines[cell])
        if not grid.contains(cell):
            raise ValidationError(f"prefilled cell {cell} lies in no slot", line=prefill_lines[cell])
    for w, no in zip(words, word_lines):
        bad = [ch for ch in w if ch not in alphabet]
        if bad:
            from .core import UnknownLetter

            raise UnknownLetter(f"word {w!r} uses letter {bad[0]!r} outside the alphabet", line=no)
    try:
        dictionary = Dictionary(words)
    except XwordError as e:
        dup = next(w for i, w in enumerate(words) if w in words[:i])
        e.line = word_lines[[i for i, w in enumerate(words) if w == dup][1]]
        raise
    return Instance(grid, alphabet, dictionary, prefills, reuse)


def _line_of_slot(e: XwordError, slots: list[Slot], slot_lines: dict[str, int]) -> Optional[int]:
    sid = getattr(e, "slot", None)
    if sid is None:
        return None
    # last occurrence wins, so duplicates point at the second line
    return slot_lines.get(sid)


def write_instance(instance: Instance, comments: Iterable[str] = ()) -> str:
    out = [HEADER]
    out.extend(f"# {c}" if c else "#" for c in comments)
    a = instance.alphabet
    out.append(f"alphabet {a.letters}")
    out.extend(f"weight {ch} {a.weights[ch]}" for ch in a.letters)
    out.append(f"reuse {'true' if instance.reuse else 'false'}")
    for s in instance.grid.slots:
        out.append(f"slot {s.id} {s.orientation} {s.row} {s.col} {s.length}")
    for (r, c), ch in instance.prefills.items():
        out.append(f"prefill {r} {c} {ch}")
    out.extend(f"word {w}" for w in instance.dictionary)
    return "\n".join(out) + "\n"


def parse_solution(text: str, instance: Instance) -> dict[str, Optional[int]]:
    a: dict[str, Optional[int]] = {}
    for no, toks in _lines(text):
        kw = toks[0]
        if kw == "assign" and len(toks) == 3:
            sid, word = toks[1], toks[2]
        elif kw == "empty" and len(toks) == 2:
            sid, word = toks[1], None
        else:
            raise ParseError("expected: assign <slot> <word> | empty <slot>", line=no)
        if sid not in instance.grid.by_id:
            raise UnknownSlot(f"unknown slot {sid!r}", line=no)
        if sid in a:
            raise ParseError(f"slot {sid} mentioned twice", line=no)
        if word is None:
            a[sid] = EMPTY
        else:
            try:
                a[sid] = instance.dictionary.lookup(word)
            except UnknownWord as e:
                e.line = no
                raise
    missing = [s.id for s in instance.grid.slots if s.id not in a]
    if missing:
        raise ParseError(f"incomplete solution: no line for slot(s) {', '.join(missing)}")
    return {s.id: a[s.id] for s in instance.grid.slots}


def write_solution(a: Mapping[str, Optional[int]], instance: Instance) -> str:
    a = normalize(instance, a)
    out = []
    for sid, w in a.items():
        if w is EMPTY:
            out.append(f"empty {sid}")
        else:
            out.append(f"assign {sid} {instance.dictionary[w]}")
    return "\n".join(out) + ("\n" if out else "")


def render(instance: Instance, a: Optional[Mapping[str, Optional[int]]] = None) -> str:
    """ASCII picture: '#' outside slots, letters on covered cells, '.' elsewhere."""
    from .core import evaluate

    rows, cols = instance.grid.extent()
    covered = evaluate(instance, a).covered_cells if a is not None else {}
    lines = []
    for r in range(1, rows + 1):
        row = []
        for c in range(1, cols + 1):
            cell = (r, c)
            if cell in covered:
                row.append(covered[cell])
            elif instance.grid.contains(cell):
                row.append(".")
            else:
                row.append("#")
        lines.append("".join(row))
    return "\n".join(lines)
