"""Shared pieces of the reduction generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from ..core import Alphabet, Dictionary, Instance, Slot, XwordError, evaluate, normalize, validate_grid
from ..io import write_instance


class GeneratorError(XwordError):
    pass


class EdgeCountEqualsK(GeneratorError):
    pass


class IsolatedVertex(GeneratorError):
    pass


class BadSum(GeneratorError):
    pass


class NotEnoughTriples(GeneratorError):
    pass


class NotRestrictedForm(GeneratorError):
    pass


class MalformedWitness(GeneratorError):
    pass


class WitnessRejected(GeneratorError):
    def __init__(self, message: str = "", *, cell=None, **kw):
        super().__init__(message, **kw)
        self.cell = cell


@dataclass
class GeneratedInstance:
    instance: Instance
    kind: str
    params: dict = field(default_factory=dict)
    witness_schema: str = ""
    data: dict = field(default_factory=dict)

    def comments(self) -> list[str]:
        out = [f"generator {self.kind}"]
        out.extend(f"param {k}={_fmt(v)}" for k, v in self.params.items())
        if self.witness_schema:
            out.append(f"witness {self.witness_schema}")
        return out

    def text(self) -> str:
        return write_instance(self.instance, self.comments())


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v).replace(" ", "")


def build(slots: list[Slot], letters: str, words: list[str], *, reuse: bool,
          weights: Optional[Mapping[str, int]] = None) -> Instance:
    weights = dict(weights) if weights is not None else {ch: 1 for ch in letters}
    return Instance(validate_grid(slots), Alphabet(letters, weights), Dictionary(words), {}, reuse)


def counter_word(value: int, width: int, digits: str) -> str:
    """`value` written in base len(digits), most significant digit first."""
    base = len(digits)
    out = []
    for _ in range(width):
        value, r = divmod(value, base)
        out.append(digits[r])
    if value:
        raise GeneratorError(f"counter overflow in {width} digits")
    return "".join(reversed(out))


def checked(gen: GeneratedInstance, words_by_slot: Mapping[str, Optional[str]]) -> dict:
    """Turn slot -> word text into an assignment and insist it is valid."""
    inst = gen.instance
    a = {sid: (None if w is None else inst.dictionary.lookup(w)) for sid, w in words_by_slot.items()}
    a = normalize(inst, a)
    ev = evaluate(inst, a)
    if not ev.valid:
        raise WitnessRejected(ev.reason or "invalid assignment", cell=ev.conflict)
    return a
