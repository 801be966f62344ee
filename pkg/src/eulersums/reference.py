"""Reference evaluations of the six worked examples.

The expressions are transcribed fixtures, loaded from packaged JSON, so
the golden comparison is independent of the closed-form builder path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .expr import ConstExpr, from_json_dict


@dataclass(frozen=True)
class ReferenceExample:
    name: str
    kind: str
    p: int
    q: int
    n: int
    expr: ConstExpr


def load_reference_examples() -> list[ReferenceExample]:
    text = resources.files("eulersums.data").joinpath("reference_examples.json").read_text()
    data = json.loads(text)
    return [ReferenceExample(e["name"], e["kind"], e["p"], e["q"], e["n"],
                             from_json_dict(e["expr"]))
            for e in data["examples"]]
