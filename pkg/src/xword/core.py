"""Grids, dictionaries, assignments and the grid graph.

All weight and consistency semantics live here; solvers only ever report
weights that `evaluate` agrees with.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping, Optional

Cell = tuple[int, int]
EMPTY = None

H = "H"
V = "V"


class XwordError(Exception):
    """Base class for every error raised by the package."""

    def __init__(self, message: str = "", *, line: Optional[int] = None):
        super().__init__(message)
        self.line = line

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class ValidationError(XwordError):
    pass


class OverlapSameOrientation(ValidationError):
    def __init__(self, message: str = "", *, slot: Optional[str] = None, **kw):
        super().__init__(message, **kw)
        self.slot = slot


class DuplicateId(ValidationError):
    def __init__(self, message: str = "", *, slot: Optional[str] = None, **kw):
        super().__init__(message, **kw)
        self.slot = slot


class LengthTooSmall(ValidationError):
    def __init__(self, message: str = "", *, slot: Optional[str] = None, **kw):
        super().__init__(message, **kw)
        self.slot = slot


class UnknownLetter(ValidationError):
    pass


class DuplicateWord(ValidationError):
    pass


class UnknownSlot(XwordError):
    pass


class UnknownWord(XwordError):
    pass


class InvalidAssignment(XwordError):
    pass


@dataclass(frozen=True)
class Alphabet:
    letters: str
    weights: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.letters) < 1:
            raise ValidationError("alphabet must contain at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValidationError(f"alphabet letters not distinct: {self.letters!r}")
        for ch in self.letters:
            if not ch.isprintable() or ch.isspace() or not ch.isascii():
                raise ValidationError(f"letter {ch!r} is not a visible ASCII symbol")
        for ch, w in self.weights.items():
            if ch not in self.letters:
                raise UnknownLetter(f"weight given for unknown letter {ch!r}")
            if not isinstance(w, int) or isinstance(w, bool) or w < 0:
                raise ValidationError(f"weight of {ch!r} must be a non-negative integer")
        # every letter gets an explicit weight, default 0
        full = {ch: int(self.weights.get(ch, 0)) for ch in self.letters}
        object.__setattr__(self, "weights", full)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, ch: str) -> bool:
        return ch in self.weights

    def weight(self, ch: str) -> int:
        return self.weights[ch]

    def word_weight(self, word: str) -> int:
        return sum(self.weights[ch] for ch in word)

    def unit(self) -> "Alphabet":
        return Alphabet(self.letters, {ch: 1 for ch in self.letters})


@dataclass(frozen=True, order=True)
class Slot:
    id: str
    orientation: str
    row: int
    col: int
    length: int

    def __post_init__(self):
        if self.orientation not in (H, V):
            raise ValidationError(f"slot {self.id}: orientation must be H or V")
        if self.length < 2:
            raise LengthTooSmall(
                f"slot {self.id}: length {self.length} < 2", slot=self.id
            )
        if self.row < 1 or self.col < 1:
            raise ValidationError(f"slot {self.id}: coordinates are 1-indexed")

    @property
    def start(self) -> Cell:
        return (self.row, self.col)

    def cell(self, pos: int) -> Cell:
        """Cell at 1-indexed offset `pos`."""
        if self.orientation == H:
            return (self.row, self.col + pos - 1)
        return (self.row + pos - 1, self.col)

    def cells(self) -> list[Cell]:
        return [self.cell(p) for p in range(1, self.length + 1)]

    def position(self, cell: Cell) -> Optional[int]:
        r, c = cell
        if self.orientation == H:
            if r == self.row and self.col <= c < self.col + self.length:
                return c - self.col + 1
        elif c == self.col and self.row <= r < self.row + self.length:
            return r - self.row + 1
        return None


@dataclass(frozen=True)
class SharedCell:
    cell: Cell
    hslot: str
    hpos: int
    vslot: str
    vpos: int

    def pos_in(self, slot_id: str) -> int:
        return self.hpos if slot_id == self.hslot else self.vpos

    def other(self, slot_id: str) -> str:
        return self.vslot if slot_id == self.hslot else self.hslot


class Grid:
    """Validated slot list with cell indices. Build with `validate_grid`."""

    def __init__(self, slots: Iterable[Slot]):
        self.slots: tuple[Slot, ...] = tuple(sorted(slots, key=lambda s: s.id))
        self.by_id: dict[str, Slot] = {}
        self.cell_h: dict[Cell, tuple[str, int]] = {}
        self.cell_v: dict[Cell, tuple[str, int]] = {}
        for s in self.slots:
            if s.id in self.by_id:
                raise DuplicateId(f"duplicate slot id {s.id!r}", slot=s.id)
            self.by_id[s.id] = s
        # report the later slot (in input order) as the offender
        for s in slots if isinstance(slots, (list, tuple)) else self.slots:
            index = self.cell_h if s.orientation == H else self.cell_v
            for p, cell in enumerate(s.cells(), 1):
                if cell in index:
                    raise OverlapSameOrientation(
                        f"slots {index[cell][0]} and {s.id} share cell {cell}",
                        slot=s.id,
                    )
                index[cell] = (s.id, p)
        shared = []
        for cell in sorted(set(self.cell_h) & set(self.cell_v)):
            (hs, hp), (vs, vp) = self.cell_h[cell], self.cell_v[cell]
            shared.append(SharedCell(cell, hs, hp, vs, vp))
        self.shared: tuple[SharedCell, ...] = tuple(shared)
        self.shared_by_cell = {sc.cell: sc for sc in self.shared}
        self._shared_of: dict[str, list[SharedCell]] = {s.id: [] for s in self.slots}
        for sc in self.shared:
            self._shared_of[sc.hslot].append(sc)
            self._shared_of[sc.vslot].append(sc)

    def __eq__(self, other):
        return isinstance(other, Grid) and self.slots == other.slots

    def __hash__(self):
        return hash(self.slots)

    def __repr__(self):
        return f"Grid({len(self.slots)} slots, {len(self.shared)} shared cells)"

    def __len__(self):
        return len(self.slots)

    def slot(self, slot_id: str) -> Slot:
        try:
            return self.by_id[slot_id]
        except KeyError:
            raise UnknownSlot(f"unknown slot {slot_id!r}") from None

    def shared_of(self, slot_id: str) -> list[SharedCell]:
        return self._shared_of[slot_id]

    def cells(self) -> set[Cell]:
        return set(self.cell_h) | set(self.cell_v)

    def contains(self, cell: Cell) -> bool:
        return cell in self.cell_h or cell in self.cell_v

    def horizontal(self) -> list[Slot]:
        return [s for s in self.slots if s.orientation == H]

    def vertical(self) -> list[Slot]:
        return [s for s in self.slots if s.orientation == V]

    def extent(self) -> tuple[int, int]:
        """(rows, cols) of the bounding box anchored at (1, 1)."""
        cells = self.cells()
        if not cells:
            return (0, 0)
        return (max(r for r, _ in cells), max(c for _, c in cells))


def validate_grid(slots: Iterable[Slot]) -> Grid:
    return Grid(list(slots))


class Dictionary:
    def __init__(self, words: Iterable[str]):
        self.words: tuple[str, ...] = tuple(words)
        self.index: dict[str, int] = {}
        for i, w in enumerate(self.words):
            if w in self.index:
                raise DuplicateWord(f"duplicate dictionary word {w!r}")
            self.index[w] = i

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i: int) -> str:
        return self.words[i]

    def __eq__(self, other):
        return isinstance(other, Dictionary) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self):
        return f"Dictionary({list(self.words)!r})"

    def lookup(self, word: str) -> int:
        try:
            return self.index[word]
        except KeyError:
            raise UnknownWord(f"word {word!r} not in dictionary") from None


@dataclass(frozen=True)
class Instance:
    grid: Grid
    alphabet: Alphabet
    dictionary: Dictionary
    prefills: Mapping[Cell, str] = field(default_factory=dict)
    reuse: bool = True

    def __post_init__(self):
        for w in self.dictionary:
            for ch in w:
                if ch not in self.alphabet:
                    raise UnknownLetter(f"word {w!r} uses letter {ch!r} outside the alphabet")
        for cell, ch in self.prefills.items():
            if not self.grid.contains(cell):
                raise ValidationError(f"prefilled cell {cell} lies in no slot")
            if ch not in self.alphabet:
                raise UnknownLetter(f"prefill {ch!r} at {cell} outside the alphabet")
        object.__setattr__(self, "prefills", dict(sorted(self.prefills.items())))

    @property
    def slots(self) -> tuple[Slot, ...]:
        return self.grid.slots

    @cached_property
    def word_weights(self) -> tuple[int, ...]:
        return tuple(self.alphabet.word_weight(w) for w in self.dictionary)

    @cached_property
    def candidates(self) -> dict[str, tuple[int, ...]]:
        """Word indices fitting each slot by length and prefills."""
        by_len: dict[int, list[int]] = {}
        for i, w in enumerate(self.dictionary):
            by_len.setdefault(len(w), []).append(i)
        out = {}
        for s in self.grid.slots:
            fixed = {p: self.prefills[c] for p, c in enumerate(s.cells(), 1) if c in self.prefills}
            out[s.id] = tuple(
                i for i in by_len.get(s.length, ())
                if all(self.dictionary[i][p - 1] == ch for p, ch in fixed.items())
            )
        return out

    def total_cells(self) -> int:
        return len(self.grid.cells())

    def with_alphabet(self, alphabet: Alphabet) -> "Instance":
        return replace(self, alphabet=alphabet)

    def with_prefills(self, prefills: Mapping[Cell, str]) -> "Instance":
        return replace(self, prefills=dict(prefills))

    def with_reuse(self, reuse: bool) -> "Instance":
        return replace(self, reuse=reuse)

    def empty_assignment(self) -> dict[str, Optional[int]]:
        return {s.id: EMPTY for s in self.grid.slots}


Assignment = dict  # slot id -> word index or EMPTY


def normalize(instance: Instance, a: Mapping[str, Optional[int]]) -> dict[str, Optional[int]]:
    """Full slot-ordered assignment; unmentioned slots are EMPTY."""
    m = len(instance.dictionary)
    for sid, w in a.items():
        if sid not in instance.grid.by_id:
            raise UnknownSlot(f"unknown slot {sid!r}")
        if w is not EMPTY and not (isinstance(w, int) and 0 <= w < m):
            raise UnknownWord(f"unknown word index {w!r} for slot {sid}")
    return {s.id: a.get(s.id, EMPTY) for s in instance.grid.slots}


def assignment_key(instance: Instance, a: Mapping[str, Optional[int]]) -> tuple[int, ...]:
    """Tie-break key: lexicographic by slot id, word index, EMPTY last."""
    m = len(instance.dictionary)
    return tuple(m if a.get(s.id) is EMPTY else a[s.id] for s in instance.grid.slots)


def fits(slot: Slot, word: str, fixed: Mapping[Cell, str]) -> bool:
    if len(word) != slot.length:
        return False
    for cell, ch in fixed.items():
        p = slot.position(cell)
        if p is not None and word[p - 1] != ch:
            return False
    return True


@dataclass
class Evaluation:
    valid: bool
    weight: int
    covered_cells: dict[Cell, str]
    reason: Optional[str] = None
    conflict: Optional[Cell] = None


def evaluate(instance: Instance, a: Mapping[str, Optional[int]]) -> Evaluation:
    """Check an assignment and score it, counting each covered cell once."""
    a = normalize(instance, a)
    words = instance.dictionary
    covered: dict[Cell, str] = {}
    seen: dict[int, str] = {}
    for s in instance.grid.slots:
        wi = a[s.id]
        if wi is EMPTY:
            continue
        word = words[wi]
        if len(word) != s.length:
            return Evaluation(False, 0, {}, f"word {word!r} does not fit slot {s.id}")
        if not instance.reuse and wi in seen:
            return Evaluation(False, 0, {}, f"word {word!r} reused in {seen[wi]} and {s.id}")
        seen[wi] = s.id
        for cell, ch in zip(s.cells(), word):
            pre = instance.prefills.get(cell)
            if pre is not None and pre != ch:
                return Evaluation(False, 0, {}, f"slot {s.id} contradicts prefill at {cell}", cell)
            old = covered.get(cell)
            if old is not None and old != ch:
                return Evaluation(False, 0, {}, f"conflict at shared cell {cell}", cell)
            covered[cell] = ch
    weight = sum(instance.alphabet.weights[ch] for ch in covered.values())
    return Evaluation(True, weight, covered)


def weight_by_words(instance: Instance, a: Mapping[str, Optional[int]]) -> int:
    """Sum of placed word weights minus doubly covered shared cells.

    Second, independent route to the weight of a valid assignment.
    """
    a = normalize(instance, a)
    total = sum(instance.word_weights[w] for w in a.values() if w is not EMPTY)
    for sc in instance.grid.shared:
        hw, vw = a[sc.hslot], a[sc.vslot]
        if hw is not EMPTY and vw is not EMPTY:
            total -= instance.alphabet.weights[instance.dictionary[hw][sc.hpos - 1]]
    return total


def is_complete_fill(instance: Instance, a: Mapping[str, Optional[int]]) -> bool:
    ev = evaluate(instance, a)
    if not ev.valid:
        raise InvalidAssignment(ev.reason or "invalid assignment")
    full = normalize(instance, a)
    return all(w is not EMPTY for w in full.values())


class GridGraph:
    """Bipartite slot intersection graph; one edge per shared cell."""

    def __init__(self, grid: Grid):
        self.vertices: tuple[str, ...] = tuple(s.id for s in grid.slots)
        self.h_side = frozenset(s.id for s in grid.slots if s.orientation == H)
        self.v_side = frozenset(s.id for s in grid.slots if s.orientation == V)
        self.adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        self.edges: dict[frozenset, SharedCell] = {}
        for sc in grid.shared:
            self.adj[sc.hslot].add(sc.vslot)
            self.adj[sc.vslot].add(sc.hslot)
            self.edges[frozenset((sc.hslot, sc.vslot))] = sc

    def degree(self, v: str) -> int:
        return len(self.adj[v])

    def neighbors(self, v: str) -> list[str]:
        return sorted(self.adj[v])

    def components(self) -> list[list[str]]:
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_cover(self, cover: Iterable[str]) -> bool:
        cover = set(cover)
        return all(e & cover for e in self.edges)


def grid_graph(grid: Grid) -> GridGraph:
    return GridGraph(grid)


@dataclass
class GraphClass:
    is_matching: bool
    is_union_of_stars: bool
    components: list[list[str]]
    max_degree: int
    vertex_cover_hint: list[str]


def classify_graph(g: GridGraph) -> GraphClass:
    comps = g.components()
    max_deg = max((g.degree(v) for v in g.vertices), default=0)
    stars = True
    for comp in comps:
        n_edges = sum(g.degree(v) for v in comp) // 2
        hubs = sum(1 for v in comp if g.degree(v) > 1)
        if n_edges != len(comp) - 1 or hubs > 1:
            stars = False
            break
    # either side restricted to non-isolated slots is a cover; take the smaller
    hs = sorted(v for v in g.h_side if g.degree(v))
    vs = sorted(v for v in g.v_side if g.degree(v))
    hint = hs if len(hs) <= len(vs) else vs
    return GraphClass(max_deg <= 1, stars, comps, max_deg, hint)
