"""Problem descriptions loaded from JSON, validated up front."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .crystal import CrystalContext
from .rootdata import CartanMatrix, Weight, WeylWord, cartan_problems, is_reduced, is_symmetrizable
from .sequence import IotaSequence


class ConfigError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("\n".join(problems))
        self.problems = problems


@dataclass
class Budgets:
    max_elements: int = 100_000
    max_depth: int | None = None
    var_cutoff: int = 12
    count_cutoff: int = 10_000


@dataclass
class ProblemConfig:
    cartan: CartanMatrix
    iota: IotaSequence
    lam: Weight
    word: WeylWord
    budgets: Budgets = field(default_factory=Budgets)
    paper_order: bool = False

    def context(self) -> CrystalContext:
        return CrystalContext(self.cartan, self.iota, self.lam)


_TOP = {"cartan", "iota", "lambda", "word", "budgets", "display"}
_REQUIRED = {"cartan", "iota", "lambda"}
_IOTA = {"prefix", "cycle"}
_BUDGETS = {"max_elements", "max_depth", "var_cutoff", "count_cutoff"}
_DISPLAY = {"paper_order"}


def _int_list(value, path: str, problems: list[str]) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        problems.append(f"{path}: expected a list of integers")
        return []
    return value


def _keys(obj, allowed: set[str], path: str, problems: list[str]) -> dict:
    if not isinstance(obj, dict):
        problems.append(f"{path}: expected an object")
        return {}
    for k in sorted(set(obj) - allowed):
        problems.append(f"{path}.{k}: unknown key")
    return obj


def parse_config(data) -> ProblemConfig:
    """Build and cross-validate a config; every problem is reported with its path."""
    problems: list[str] = []
    data = _keys(data, _TOP, "$", problems)
    for k in sorted(_REQUIRED - set(data)):
        problems.append(f"$.{k}: missing")
    if problems:
        raise ConfigError(problems)

    rows = data["cartan"]
    if not isinstance(rows, list) or not rows:
        problems.append("$.cartan: expected a nonempty list of rows")
        raise ConfigError(problems)
    rows = [_int_list(r, f"$.cartan[{n}]", problems) for n, r in enumerate(rows)]
    if problems:
        raise ConfigError(problems)
    problems += [f"$.cartan: {p}" for p in cartan_problems(rows)]
    if problems:
        raise ConfigError(problems)
    A = CartanMatrix.from_rows(rows)
    if not is_symmetrizable(A):
        problems.append("$.cartan: matrix is not symmetrizable")

    iota_raw = _keys(data["iota"], _IOTA, "$.iota", problems)
    prefix = _int_list(iota_raw.get("prefix", []), "$.iota.prefix", problems)
    cycle = _int_list(iota_raw.get("cycle", []), "$.iota.cycle", problems)
    if not cycle:
        problems.append("$.iota.cycle: must be nonempty")
        raise ConfigError(problems)
    iota = IotaSequence(tuple(prefix), tuple(cycle))
    problems += [f"$.iota: {p}" for p in iota.validate(A)]

    m = _int_list(data["lambda"], "$.lambda", problems)
    if len(m) != A.n:
        problems.append(f"$.lambda: expected {A.n} entries, got {len(m)}")
    elif any(v < 0 for v in m):
        problems.append(f"$.lambda: weight {m} is not dominant")
    lam = Weight(tuple(m)) if len(m) == A.n else Weight((0,) * A.n)

    letters = _int_list(data.get("word", []), "$.word", problems)
    word = WeylWord(tuple(letters))
    bad = [i for i in letters if not 1 <= i <= A.n]
    if bad:
        problems.append(f"$.word: letters {bad} outside 1..{A.n}")
    else:
        if not is_reduced(A, word):
            problems.append(f"$.word: {letters} is not a reduced word")
        if not iota.extends(word):
            problems.append(f"$.word: iota does not start with the word (iota starts {list(iota.head(len(word)))})")

    budgets = Budgets()
    b_raw = _keys(data.get("budgets", {}), _BUDGETS, "$.budgets", problems)
    for k, v in b_raw.items():
        if k not in _BUDGETS:
            continue
        if k == "max_depth" and v is None:
            continue
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            problems.append(f"$.budgets.{k}: expected a positive integer")
        else:
            setattr(budgets, k, v)

    d_raw = _keys(data.get("display", {}), _DISPLAY, "$.display", problems)
    paper_order = d_raw.get("paper_order", False)
    if not isinstance(paper_order, bool):
        problems.append("$.display.paper_order: expected a boolean")
        paper_order = False

    if problems:
        raise ConfigError(problems)
    return ProblemConfig(A, iota, lam, word, budgets, paper_order)


def load_config(path: str | Path) -> ProblemConfig:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError([f"cannot read {path}: {exc}"]) from exc
    except json.JSONDecodeError as exc:
        raise ConfigError([f"{path}: invalid JSON: {exc}"]) from exc
    return parse_config(data)
