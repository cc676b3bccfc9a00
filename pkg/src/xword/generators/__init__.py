"""Reduction-based instance generators with witness translators."""

from .base import (
    BadSum,
    EdgeCountEqualsK,
    GeneratedInstance,
    GeneratorError,
    IsolatedVertex,
    MalformedWitness,
    NotEnoughTriples,
    NotRestrictedForm,
    WitnessRejected,
)
from .indset import gen_from_independent_set, has_independent_set, witness_indset
from .inputs import (
    CnfFormula,
    Graph,
    UlcInstance,
    parse_dimacs,
    parse_graph,
    parse_int_list,
    parse_ulc,
    write_dimacs,
    write_graph,
    write_int_list,
    write_ulc,
)
from .partition import gen_from_three_partition, has_three_partition, witness_three_partition
from .sat import (
    brute_exactly1,
    brute_sat,
    check_restricted,
    exactly1_satisfies,
    gen_from_x1sat,
    restrict_map,
    restrict_sat,
    satisfies,
    witness_x1sat,
)
from .sparse import (
    SparseCnf,
    SparsePartition,
    brute_sparse,
    check_sparse,
    gen_from_sparse_sat,
    sparse_branches,
    sparse_partition,
    witness_sparse,
)
from .ulc import gen_from_ulc, planted_ulc, witness_ulc

_TRANSLATORS = {
    "indset": witness_indset,
    "3partition": witness_three_partition,
    "x1sat": witness_x1sat,
    "sparse": witness_sparse,
    "ulc": witness_ulc,
}


def witness_to_solution(gen: GeneratedInstance, witness) -> dict:
    """Assignment built from a certificate of the source problem."""
    try:
        translate = _TRANSLATORS[gen.kind]
    except KeyError:
        raise MalformedWitness(f"no witness translator for {gen.kind!r}") from None
    return translate(gen, witness)
