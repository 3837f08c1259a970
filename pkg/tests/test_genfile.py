import pytest

from qtperm.constructions import psl2, symmetric_group
from qtperm.genfile import (GeneratorFile, ParseError, file_from_group,
                            format_generators, format_permutation,
                            group_from_file, parse_generators)
from qtperm.perm import Permutation

SAMPLE = """\
# a sample file
degree 4
label K4-ish
(1 2)(3 4)
[2, 1, 4, 3]  # image-list form of the same element
(1 3)(2 4)
"""


def test_parse_sample():
    gfile = parse_generators(SAMPLE)
    assert gfile.degree == 4
    assert gfile.label == "K4-ish"
    assert gfile.perms[0] == Permutation.from_cycles(4, [(0, 1), (2, 3)])
    assert gfile.perms[1] == gfile.perms[0]
    assert gfile.perms[2] == Permutation.from_cycles(4, [(0, 2), (1, 3)])
    assert group_from_file(gfile).order() == 4


def test_image_list_simple():
    gfile = parse_generators("degree 5\n[2, 1, 3, 4, 5]\n")
    assert gfile.perms[0] == Permutation.from_cycles(5, [(0, 1)])


def test_error_missing_degree():
    with pytest.raises(ParseError, match="degree"):
        parse_generators("(1 2)\n")


def test_error_nonpositive_degree():
    with pytest.raises(ParseError, match="positive"):
        parse_generators("degree 0\n(1 2)\n")


def test_error_no_generators():
    with pytest.raises(ParseError, match="no generators"):
        parse_generators("degree 3\n")


def test_error_point_out_of_range():
    with pytest.raises(ParseError, match="outside"):
        parse_generators("degree 3\n(1 4)\n")
    with pytest.raises(ParseError, match="outside"):
        parse_generators("degree 3\n[1, 2, 4]\n")


def test_error_repeated_point():
    with pytest.raises(ParseError, match="repeated") as exc:
        parse_generators("degree 3\n(1 2)(1 3)\n")
    assert exc.value.line == 2


def test_error_image_list_length():
    with pytest.raises(ParseError, match="entries"):
        parse_generators("degree 4\n[1, 2, 3]\n")


def test_error_image_list_not_bijective():
    with pytest.raises(ParseError):
        parse_generators("degree 3\n[1, 1, 2]\n")


def test_error_junk_line_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_generators("degree 3\n(1 2)\nhello\n")
    assert exc.value.line == 3


def test_format_permutation():
    assert format_permutation(Permutation.identity(4)) == "()"
    p = Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
    assert format_permutation(p) == "(1 2)(3 4 5)"


def test_round_trip_groups():
    for act in (symmetric_group(5), psl2(3)):
        gfile = file_from_group(act.group, label=act.label)
        back = parse_generators(format_generators(gfile))
        assert back.degree == gfile.degree
        assert back.label == act.label
        assert back.perms == gfile.perms
        assert group_from_file(back).order() == act.group.order()


def test_comments_and_blank_lines_ignored():
    text = "\n# lead\n\ndegree 2  # inline\n\n(1 2)\n\n"
    gfile = parse_generators(text)
    assert gfile.degree == 2
    assert len(gfile.perms) == 1
