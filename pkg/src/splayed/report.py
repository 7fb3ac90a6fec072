"""Machine-readable reports.

Rationals are serialized as "p/q" strings, infinite dimensions as "infinite".
JSON output is key-sorted so identical inputs give byte-identical reports.
"""

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__


def encode(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return str(value)


def decode_rational(text):
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass
class Report:
    verb: str
    inputs: dict
    verdicts: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)
    dimensions: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    seed: int = 0
    version: str = __version__
    timing: dict = None

    def __post_init__(self):
        # store JSON-ready values so that a report equals its own round trip
        self.inputs = encode(self.inputs)
        self.verdicts = encode(self.verdicts)
        self.dimensions = encode(self.dimensions)
        self.data = encode(self.data)
        self.diagnostics = [str(m) for m in self.diagnostics]
        self.classes = {k: [Fraction(c) for c in v] for k, v in self.classes.items()}

    def to_dict(self):
        d = asdict(self)
        d["classes"] = {k: [encode(c) for c in v] for k, v in self.classes.items()}
        if self.timing is None:
            d.pop("timing")
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["classes"] = {k: [decode_rational(c) for c in v] for k, v in d.get("classes", {}).items()}
        return cls(**d)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self):
        lines = [f"{self.verb}  (seed {self.seed}, version {self.version})"]
        for k, v in sorted(self.inputs.items()):
            lines.append(f"  input {k}: {encode(v)}")
        for k, v in sorted(self.verdicts.items()):
            lines.append(f"  {k}: {encode(v)}")
        for k, v in sorted(self.dimensions.items()):
            lines.append(f"  {k}: {encode(v)}")
        for k, v in sorted(self.classes.items()):
            lines.append(f"  {k}: [{', '.join(str(Fraction(c)) for c in v)}]")
        for k, v in sorted(self.data.items()):
            lines.append(f"  {k}: {encode(v)}")
        for msg in self.diagnostics:
            lines.append(f"  note: {msg}")
        if self.timing:
            lines.append(f"  time: {self.timing.get('seconds', 0):.3f}s")
        return "\n".join(lines)
