"""Reading and writing the JSON file formats.

Schema violations and malformed JSON surface as :class:`StructuralError`
with a one-line message. Paths inside a file are resolved against the
directory of that file.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

from loguru import logger
from pydantic import BaseModel, ValidationError

from parcoh.cohomology.actions import PGAction, action_from_matrices
from parcoh.constructions.groups import FiniteGroupTable, group_from_table
from parcoh.core.table import UNIT, Element, PartialGroupTable, make_table
from parcoh.errors import StructuralError
from parcoh.extensions.twisted_product import ExtensionTable
from parcoh.extensions.twisting import TwistingPair
from parcoh.formats.models import (
    ActionFile,
    ElementMapFile,
    GroupActionFile,
    GroupFile,
    PartialGroupFile,
    ProjectionFile,
    TwistingPairFile,
)
from parcoh.homotopy.morphisms import PGHom, from_name_map, identity_hom, inverse_hom
from parcoh.utils.file_utils import read_json_file, write_json_file

Model = TypeVar("Model", bound=BaseModel)
PathLike = Union[str, Path]


def _parse(model: Type[Model], data: Any, where: str) -> Model:
    try:
        return model.model_validate(data)
    except ValidationError as error:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise StructuralError(
            f"{where}: {location}: {first['msg']} "
            f"({error.error_count()} schema error(s))"
        ) from None


def _load(model: Type[Model], path: PathLike) -> Model:
    logger.debug(f"Reading {model.__name__} from {path}")
    return _parse(model, read_json_file(path), str(path))


def _lookup(names: Dict[str, int], name: str, where: str) -> Element:
    try:
        return names[name]
    except KeyError:
        raise StructuralError(f"{where}: unknown element {name!r}") from None


def partial_group_from_model(
    model: PartialGroupFile, where: str = "partial group"
) -> PartialGroupTable:
    """Build a table from a parsed file; the unit ``"1"`` is moved to id 0."""
    if "1" not in model.elements:
        raise StructuralError(f"{where}: the unit '1' is not listed")
    if len(set(model.elements)) != len(model.elements):
        raise StructuralError(f"{where}: element names must be distinct")
    names = ["1"] + [x for x in model.elements if x != "1"]
    index = {x: i for i, x in enumerate(names)}

    inv = list(range(len(names)))
    for x, y in model.inv.items():
        inv[_lookup(index, x, where)] = _lookup(index, y, where)

    prod: Dict[Tuple[Element, Element], Element] = {}
    for a, b, c in model.product:
        key = (_lookup(index, a, where), _lookup(index, b, where))
        if key in prod:
            raise StructuralError(f"{where}: product of ({a}, {b}) given twice")
        prod[key] = _lookup(index, c, where)

    domain: Dict[int, List[Tuple[Element, ...]]] = {}
    for key, words in model.domain.items():
        try:
            n = int(key)
        except ValueError:
            raise StructuralError(
                f"{where}: domain key {key!r} is not a degree"
            ) from None
        domain[n] = [tuple(_lookup(index, x, where) for x in w) for w in words]
    domain.setdefault(2, list(prod))
    for n in range(3, model.max_degree + 1):
        domain.setdefault(n, [])
    return make_table(names, inv, model.max_degree, domain, prod)


def partial_group_to_model(table: PartialGroupTable) -> PartialGroupFile:
    """The file form of ``table``; words are listed in id order."""
    names = table.names
    return PartialGroupFile(
        elements=list(names),
        inv={names[x]: names[y] for x, y in enumerate(table.inv) if x != y},
        max_degree=table.max_degree,
        domain={
            str(n): [list(table.name_word(w)) for w in table.words(n)]
            for n in range(2, table.max_degree + 1)
        },
        product=[
            [names[a], names[b], names[table.prod[(a, b)]]] for a, b in table.words(2)
        ],
    )


def load_partial_group(path: PathLike) -> PartialGroupTable:
    return partial_group_from_model(_load(PartialGroupFile, path), str(path))


def dump_partial_group(
    table: PartialGroupTable, path: PathLike, write_schema: bool = False
) -> Optional[Path]:
    return write_json_file(
        partial_group_to_model(table).model_dump(),
        path,
        write_schema=write_schema,
        model=PartialGroupFile,
    )


def _resolve(
    ref: Union[str, PartialGroupFile], relative_to: Path, where: str
) -> PartialGroupTable:
    if isinstance(ref, PartialGroupFile):
        return partial_group_from_model(ref, where)
    return load_partial_group(relative_to / ref)


def load_group(path: PathLike) -> FiniteGroupTable:
    """A finite group from a multiplication-table file."""
    model = _load(GroupFile, path)
    index = {x: i for i, x in enumerate(model.elements)}
    k = len(model.elements)
    rows = []
    for row in model.table:
        entries = []
        for entry in row:
            if isinstance(entry, int):
                if not 0 <= entry < k:
                    raise StructuralError(f"{path}: table entry {entry} out of range")
                entries.append(entry)
            else:
                entries.append(_lookup(index, entry, str(path)))
        rows.append(entries)
    return group_from_table(model.elements, rows)


def load_action(path: PathLike) -> PGAction:
    path = Path(path)
    model = _load(ActionFile, path)
    table = _resolve(model.group, path.parent, f"{path}: group")
    index = {x: i for i, x in enumerate(table.names)}
    matrices = {
        _lookup(index, name, str(path)): matrix for name, matrix in model.phi.items()
    }
    r = len(model.coeffs)
    for name, matrix in model.phi.items():
        if len(matrix) != r or any(len(row) != r for row in matrix):
            raise StructuralError(f"{path}: phi({name}) is not a {r}x{r} matrix")
    return action_from_matrices(table, tuple(model.coeffs), matrices)


def load_twisting_pair(path: PathLike) -> TwistingPair:
    path = Path(path)
    model = _load(TwistingPairFile, path)
    base = _resolve(model.base, path.parent, f"{path}: base")
    fiber = _resolve(model.fiber, path.parent, f"{path}: fiber")
    index = {x: i for i, x in enumerate(base.names)}

    given: Dict[Element, PGHom] = {}
    for name, names in model.t.items():
        given[_lookup(index, name, str(path))] = from_name_map(fiber, fiber, names)
    identity = identity_hom(fiber)
    t: List[PGHom] = []
    for g in base.elements:
        if g in given:
            t.append(given[g])
        elif base.inv[g] in given and g != UNIT:
            t.append(inverse_hom(given[base.inv[g]]))
        else:
            t.append(identity)

    fiber_index = {x: i for i, x in enumerate(fiber.names)}
    eta = {p: UNIT for p in base.domain[2]}
    for g, h, value in model.eta:
        key = (_lookup(index, g, str(path)), _lookup(index, h, str(path)))
        if key not in eta:
            raise StructuralError(f"{path}: eta given on ({g}, {h}), not in D_2")
        eta[key] = _lookup(fiber_index, value, str(path))
    return TwistingPair(base, fiber, tuple(t), eta)


def twisting_pair_to_model(
    pair: TwistingPair,
    base_ref: Union[str, PartialGroupFile, None] = None,
    fiber_ref: Union[str, PartialGroupFile, None] = None,
) -> TwistingPairFile:
    """The file form of ``pair``; identity maps and unit values are omitted."""
    base, fiber = pair.base, pair.fiber
    t = {
        base.names[g]: {
            fiber.names[x]: fiber.names[y] for x, y in enumerate(tg.map1) if x != y
        }
        for g, tg in enumerate(pair.t)
        if not all(x == y for x, y in enumerate(tg.map1))
    }
    eta = [
        [base.names[g], base.names[h], fiber.names[v]]
        for (g, h), v in sorted(pair.eta.items())
        if v != UNIT
    ]
    return TwistingPairFile(
        base=base_ref if base_ref is not None else partial_group_to_model(base),
        fiber=fiber_ref if fiber_ref is not None else partial_group_to_model(fiber),
        t=t,
        eta=eta,
    )


def load_element_map(path: PathLike) -> PGHom:
    path = Path(path)
    model = _load(ElementMapFile, path)
    source = _resolve(model.source, path.parent, f"{path}: source")
    target = _resolve(model.target, path.parent, f"{path}: target")
    return from_name_map(source, target, model.map)


def dump_extension(
    extension: ExtensionTable, path: PathLike, write_schema: bool = False
) -> Path:
    """Write the total table and a ``.projection.json`` sidecar next to it."""
    path = Path(path)
    dump_partial_group(extension.total, path, write_schema=write_schema)
    sidecar = path.with_suffix(".projection.json")
    model = ProjectionFile(
        total=path.name,
        projection=extension.projection.name_map(),
        fiber_inclusion=extension.fiber_inclusion.name_map(),
    )
    write_json_file(model.model_dump(), sidecar)
    return sidecar


def load_group_action(
    path: PathLike, K: FiniteGroupTable, H: FiniteGroupTable
) -> List[Tuple[int, ...]]:
    """``alpha[h]`` as element maps of ``K`` in group ids, indexed by ``H``."""
    model = _load(GroupActionFile, path)
    k_index = {x: i for i, x in enumerate(K.names)}
    h_index = {x: i for i, x in enumerate(H.names)}
    alpha = [tuple(range(K.order)) for _ in range(H.order)]
    for h_name, names in model.alpha.items():
        h = _lookup(h_index, h_name, str(path))
        images = list(range(K.order))
        for x, y in names.items():
            images[_lookup(k_index, x, str(path))] = _lookup(k_index, y, str(path))
        alpha[h] = tuple(images)
    return alpha
