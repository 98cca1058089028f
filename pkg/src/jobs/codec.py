"""
JSON codec for rings, elements, matrices, modules and groups

Integers travel as strings so arbitrary precision survives any JSON reader.
Algebra elements are written as expressions like "e1 + 2*a" and read back
from expressions or coordinate arrays.
"""
import re
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..errors import JobSpecError, RingSpecError
from ..linalg import FinDimAlgebra, Integers, IntegersMod, Mat, PrimeField, RingSpec
from ..modules.fpmodule import FpModule
from ..modules.groups import FgAbGroup
from .models import ModuleSpec, RingBlock

_TERM = re.compile(r"^(?:(?P<coef>\d+)\s*\*?\s*)?(?P<name>[A-Za-z_][A-Za-z0-9_]*)?$")
_MOD = re.compile(r"^(?:Z|Z_|Z/)(?P<n>\d+)$")
_FIELD = re.compile(r"^(?:F_?|GF)(?P<p>\d+)$")


def parse_ring(spec: Union[str, RingBlock, Dict[str, Any]]) -> RingSpec:
    """Ring from a shorthand ("Z", "Z/4", "F_2", "A2") or a tagged block"""
    if isinstance(spec, dict):
        spec = RingBlock.model_validate(spec)
    if isinstance(spec, str):
        text = spec.strip().replace(" ", "")
        if text in ("Z", "Integers"):
            return Integers()
        if text == "A2":
            return FinDimAlgebra.path_a2()
        match = _MOD.match(text)
        if match:
            return IntegersMod(int(match.group("n")))
        match = _FIELD.match(text)
        if match:
            return PrimeField(int(match.group("p")))
        raise RingSpecError(f"Unknown ring shorthand {spec!r}")

    if spec.kind == "integers":
        return Integers()
    if spec.kind == "integers_mod":
        if spec.n is None:
            raise RingSpecError("integers_mod needs n")
        return IntegersMod(spec.n)
    if spec.kind == "prime_field":
        if spec.p is None:
            raise RingSpecError("prime_field needs p")
        return PrimeField(spec.p)
    return _parse_algebra(spec)


def _parse_algebra(spec: RingBlock) -> FinDimAlgebra:
    if spec.p is None or not spec.basis or not spec.idempotents:
        raise RingSpecError("algebra needs p, basis and idempotents")
    names = spec.basis
    if spec.structure_constants is not None:
        index = {name: i for i, name in enumerate(names)}
        try:
            idem = tuple(index[name] for name in spec.idempotents)
        except KeyError as e:
            raise RingSpecError(f"Unknown idempotent {e}") from e
        constants = tuple(
            tuple(tuple(int(c) % spec.p for c in col) for col in row)
            for row in spec.structure_constants
        )
        return FinDimAlgebra(spec.p, tuple(names), constants, idem, spec.label)

    products = {}
    for key, value in (spec.table or {}).items():
        parts = [p.strip() for p in key.split("*")]
        if len(parts) != 2:
            raise RingSpecError(f"Product key {key!r} must look like 'x*y'")
        if isinstance(value, str):
            coeffs, multiple = _expression_coeffs(value, names, spec.p)
            if multiple:
                raise RingSpecError(f"Product {key!r} must be written in the basis, got {value!r}")
            value = {names[i]: c for i, c in enumerate(coeffs) if c}
        products[(parts[0], parts[1])] = value
    return FinDimAlgebra.from_table(spec.p, names, products, spec.idempotents, spec.label)


def ring_to_json(ring: RingSpec) -> Union[str, Dict[str, Any]]:
    if isinstance(ring, Integers):
        return "Z"
    if isinstance(ring, PrimeField):
        return f"F_{ring.p}"
    if isinstance(ring, IntegersMod):
        return f"Z/{ring.n}"
    if isinstance(ring, FinDimAlgebra):
        table = {}
        for (a, b), result in ring.product_table().items():
            table[f"{a}*{b}"] = " + ".join(
                name if c == 1 else f"{c}*{name}" for name, c in result.items()
            )
        return {
            "kind": "algebra",
            "p": ring.p,
            "basis": list(ring.basis_names),
            "table": table,
            "idempotents": [ring.basis_names[i] for i in ring.idempotent_indices],
            "label": ring.label,
        }
    raise RingSpecError(f"Cannot encode {ring}")


# --- elements --------------------------------------------------------------


def _expression_coeffs(text: str, names: Sequence[str], p: int) -> Tuple[List[int], int]:
    """Basis coefficients of an expression like "e1 + 2*a - e2", and the multiple of 1 from bare numbers"""
    index = {name: i for i, name in enumerate(names)}
    coeffs = [0] * len(names)
    unit_multiple = 0
    compact = text.replace(" ", "")
    if not compact:
        raise JobSpecError("Empty algebra expression")
    for sign, term in re.findall(r"([+-]?)([^+-]+)", compact):
        match = _TERM.match(term)
        if not match or (match.group("coef") is None and match.group("name") is None):
            raise JobSpecError(f"Cannot parse term {term!r} of {text!r}")
        coef = int(match.group("coef") or 1) * (-1 if sign == "-" else 1)
        name = match.group("name")
        if name is None:
            unit_multiple += coef
        elif name not in index:
            raise JobSpecError(f"Unknown basis element {name!r} in {text!r}")
        else:
            coeffs[index[name]] += coef
    return [c % p for c in coeffs], unit_multiple


def parse_element(ring: RingSpec, value: Any):
    if isinstance(ring, FinDimAlgebra):
        if isinstance(value, list):
            if len(value) != ring.degree:
                raise JobSpecError(f"Expected {ring.degree} coordinates, got {len(value)}")
            return ring.from_coords([_int(v) for v in value])
        if isinstance(value, int):
            return ring.scalar(value)
        if isinstance(value, str):
            coeffs, multiple = _expression_coeffs(value, ring.basis_names, ring.p)
            return ring.add(ring.from_coords(coeffs), ring.scalar(multiple))
        raise JobSpecError(f"Cannot read algebra element {value!r}")
    if isinstance(value, list):
        raise JobSpecError(f"Expected a scalar entry over {ring}, got {value!r}")
    return ring.canonical(_int(value))


def element_to_json(ring: RingSpec, x) -> str:
    if isinstance(ring, FinDimAlgebra):
        return ring.format_element(x)
    return str(x)


def _int(value: Any) -> int:
    if isinstance(value, bool):
        raise JobSpecError(f"Expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError as e:
            raise JobSpecError(f"Expected an integer string, got {value!r}") from e
    raise JobSpecError(f"Expected an integer, got {value!r}")


# --- matrices and modules ---------------------------------------------------


def parse_matrix(ring: RingSpec, value: Any, cols: Optional[int] = None) -> Mat:
    """Bare row arrays or {"rows", "cols", "entries"} objects"""
    if isinstance(value, dict):
        try:
            rows, n_cols, entries = int(value["rows"]), int(value["cols"]), value["entries"]
        except (KeyError, TypeError, ValueError) as e:
            raise JobSpecError(f"Matrix object needs rows, cols and entries: {e}") from e
        if cols is not None and n_cols != cols:
            raise JobSpecError(f"Expected {cols} columns, got {n_cols}")
        if len(entries) != rows:
            raise JobSpecError(f"Matrix declares {rows} rows but lists {len(entries)}")
        return Mat.from_rows(ring, [[parse_element(ring, x) for x in r] for r in entries], n_cols)
    if isinstance(value, list):
        if not value and cols is None:
            raise JobSpecError("An empty row array needs an explicit column count")
        return Mat.from_rows(ring, [[parse_element(ring, x) for x in r] for r in value], cols)
    raise JobSpecError(f"Cannot read matrix {value!r}")


def matrix_to_json(m: Mat) -> Dict[str, Any]:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[element_to_json(m.ring, x) for x in r] for r in m.rows_list()],
    }


def parse_module(ring: RingSpec, spec: Union[ModuleSpec, Dict[str, Any]]) -> FpModule:
    if isinstance(spec, dict):
        spec = ModuleSpec.model_validate(spec)
    relations = parse_matrix(ring, spec.relations, spec.generators)
    return FpModule(ring, spec.side, spec.generators, relations)


def module_to_json(module: FpModule) -> Dict[str, Any]:
    return {
        "side": module.side,
        "generators": module.generators,
        "relations": matrix_to_json(module.relations),
    }


def group_to_json(group: FgAbGroup) -> Dict[str, Any]:
    return {
        "free_rank": group.free_rank,
        "invariant_factors": [str(d) for d in group.invariant_factors],
        "text": str(group),
    }


def parse_group(value: Dict[str, Any]) -> FgAbGroup:
    return FgAbGroup(int(value["free_rank"]), tuple(_int(d) for d in value["invariant_factors"]))
