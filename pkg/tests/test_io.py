import pytest
from conftest import cross

from xword.core import LengthTooSmall, UnknownLetter, UnknownSlot, UnknownWord
from xword.corpus import full_prefills, random_corpus
from xword.io import ParseError, parse_instance, parse_solution, render, write_instance, write_solution

FIG = """XW 1
alphabet SUIVRETA
weight S 7
weight U 5
weight I 4
weight V 2
weight R 6
weight E 1
weight T 3
slot a H 1 1 5
word SUIVRE
word TRES
"""


def test_fixture_file(data_dir):
    inst = parse_instance((data_dir / "fix_cross.xw").read_text())
    assert len(inst.grid.slots) == 2 and len(inst.grid.shared) == 1
    assert inst == cross()


def test_weights_default_to_zero():
    inst = parse_instance(FIG)
    assert [inst.alphabet.weight(c) for c in "SUIVRET"] == [7, 5, 4, 2, 6, 1, 3]
    assert inst.alphabet.weight("A") == 0


def test_reuse_defaults_true():
    assert parse_instance("XW 1\nalphabet a\nslot s H 1 1 2\n").reuse


def test_short_slot_line_number():
    with pytest.raises(LengthTooSmall) as e:
        parse_instance("XW 1\nalphabet ab\nslot a H 1 1 1\n")
    assert e.value.line == 3


@pytest.mark.parametrize("text", [
    "",
    "XW 2\n",
    "XW 1\nalphabet ab\nslot a Q 1 1 2\n",
    "XW 1\nalphabet ab\nslot a H x 1 2\n",
    "XW 1\nalphabet ab\nreuse maybe\n",
    "XW 1\nalphabet ab\nfrobnicate\n",
    "XW 1\nalphabet ab\nweight a -1\n",
])
def test_rejects_with_line(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_unknown_letter_in_word():
    with pytest.raises(UnknownLetter):
        parse_instance("XW 1\nalphabet ab\nslot a H 1 1 2\nword az\n")


def test_round_trip_corpus():
    for i, inst in enumerate(random_corpus(60, base_seed=77)):
        for x in (inst, full_prefills(inst, i)):
            text = write_instance(x)
            assert parse_instance(text) == x
            assert write_instance(parse_instance(text)) == text


def test_solution_round_trip(fix_cross):
    a = parse_solution("assign h1 bb\nassign v1 bb\n", fix_cross)
    bb = fix_cross.dictionary.lookup("bb")
    assert a == {"h1": bb, "v1": bb}
    assert parse_solution(write_solution(a, fix_cross), fix_cross) == a
    assert write_solution({"h1": None, "v1": bb}, fix_cross) == "empty h1\nassign v1 bb\n"


def test_solution_errors(fix_cross):
    with pytest.raises(ParseError, match="incomplete"):
        parse_solution("assign h1 bb\n", fix_cross)
    with pytest.raises(UnknownSlot):
        parse_solution("assign q bb\nassign h1 bb\nassign v1 bb\n", fix_cross)
    with pytest.raises(UnknownWord):
        parse_solution("assign h1 aa\nassign v1 bb\n", fix_cross)
    with pytest.raises(ParseError):
        parse_solution("assign h1 bb\nassign h1 bb\nassign v1 bb\n", fix_cross)


def test_render(fix_cross):
    bb = fix_cross.dictionary.lookup("bb")
    assert render(fix_cross, {"h1": bb, "v1": bb}) == "bb\nb#"
    assert render(fix_cross) == "..\n.#"
