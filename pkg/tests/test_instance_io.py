"""
Instance documents: normalised serialisation, seeded generation and
line-numbered parse errors.
"""

import json
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest
from dotenv import load_dotenv

from cli import format_number, generate_random_instance, load_instance, parse_instance, save_instance, serialize_instance
from election import Instance, InstanceError, InstanceFileError, NormSpec, ScoringRule

load_dotenv()

BINARY_DOCUMENT = """{
  "issue_space": "binary",
  "dimension": 2,
  "norm": {"p": 1},
  "epsilon": "1",
  "objective": "constructive",
  "scoring": {"rule": "plurality"},
  "candidates": [
    ["1", "1"],
    ["0", "0"]
  ],
  "voters": [
    ["0", "1"],
    ["0", "0"]
  ]
}
"""


def test_format_number():
    assert format_number(3.0) == "3"
    assert format_number(-0.5) == "-0.5"
    assert float(format_number(0.1)) == 0.1


def test_parse_binary_document():
    instance = parse_instance(BINARY_DOCUMENT)
    assert instance.is_binary
    assert instance.candidates == ((1.0, 1.0), (0.0, 0.0))
    assert instance.norm.p == 1
    assert instance.weights is None
    assert serialize_instance(instance) == BINARY_DOCUMENT


@pytest.mark.parametrize("shape", [
    dict(issue_space="real", dimension=3, candidates=4, voters=7, norm="inf", scoring="borda"),
    dict(issue_space="real", dimension=2, candidates=3, voters=50, groups=4, norm=2, scoring="veto",
         objective="destructive", epsilon=0.37),
    dict(issue_space="binary", dimension=5, candidates=3, voters=9, norm=3, scoring="k_approval", k=2),
])
def test_serialised_documents_are_stable(shape):
    instance = generate_random_instance(seed=11, **shape)
    document = serialize_instance(instance)
    parsed = parse_instance(document)
    assert parsed == instance
    assert serialize_instance(parsed) == document


def test_table_scoring_survives(tmp_path):
    instance = Instance(
        issue_space="real",
        dimension=1,
        candidates=((0.0,), (1.0,), (2.0,)),
        voters=((0.4,),),
        norm=NormSpec(p="inf"),
        scoring=ScoringRule.table(["3", "1.5", "0"]),
        epsilon=0.25,
    )
    path = tmp_path / "table.json"
    save_instance(instance, path)
    assert json.loads(path.read_text())["norm"] == {"p": "inf"}
    assert load_instance(path) == instance


def test_invalid_json_reports_line():
    with pytest.raises(InstanceFileError) as info:
        parse_instance('{\n  "dimension": 2,\n  oops\n}')
    assert info.value.line == 3


def test_voters_and_groups_together():
    document = BINARY_DOCUMENT.replace(
        '  "voters": [',
        '  "groups": [{"position": ["0", "1"], "weight": 2}],\n  "voters": [',
    )
    with pytest.raises(InstanceFileError) as info:
        parse_instance(document)
    assert info.value.line == 12


def test_non_binary_coordinate_points_at_voter():
    document = BINARY_DOCUMENT.replace('    ["0", "0"]\n  ]\n}', '    ["2", "0"]\n  ]\n}')
    with pytest.raises(InstanceFileError) as info:
        parse_instance(document)
    assert info.value.line == 14
    assert "voter 1" in str(info.value)


@pytest.mark.parametrize("old, new", [
    ('"norm": {"p": 1}', '"norm": {"q": 1}'),
    ('"norm": {"p": 1}', '"norm": {"p": 0}'),
    ('"epsilon": "1"', '"epsilon": "-1"'),
    ('"epsilon": "1"', '"epsilon": "one"'),
    ('"objective": "constructive"', '"objective": "neutral"'),
    ('"scoring": {"rule": "plurality"}', '"scoring": {"rule": "k_approval"}'),
    ('"dimension": 2', '"dimension": 2, "extra": 1'),
])
def test_rejected_fields(old, new):
    with pytest.raises(InstanceFileError):
        parse_instance(BINARY_DOCUMENT.replace(old, new))


def test_group_weights_must_be_positive():
    document = BINARY_DOCUMENT.replace(
        '  "voters": [\n    ["0", "1"],\n    ["0", "0"]\n  ]',
        '  "groups": [\n    {"position": ["0", "1"], "weight": 0}\n  ]',
    )
    with pytest.raises(InstanceFileError) as info:
        parse_instance(document)
    assert info.value.line == 13


def test_missing_keys():
    with pytest.raises(InstanceFileError) as info:
        parse_instance('{"issue_space": "real", "voters": []}')
    assert "missing keys" in str(info.value)


def test_grouped_generation():
    instance = generate_random_instance("real", 2, 3, voters=1000, groups=3, seed=4)
    assert len(set(instance.voters)) == 3
    assert sum(instance.weights) == 1000
    assert min(instance.weights) >= 1
    assert instance == generate_random_instance("real", 2, 3, voters=1000, groups=3, seed=4)


def test_too_many_binary_groups():
    with pytest.raises(InstanceError):
        generate_random_instance("binary", 2, 2, voters=10, groups=5)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
