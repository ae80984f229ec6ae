"""TOML scene files: declarative input for the command-line front end.

A scene names a prime, an algebra (builder or explicit structure tensor),
and optionally a group, ideals, modules and a command block. Parsing
errors carry the TOML path of the offending entry.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .algebras import Algebra, AlgebraError, group_algebra, new_algebra, quantum_complete_intersection
from .gflinalg import GFError, check_prime
from .groups import (
    Group,
    GroupError,
    SubgroupHandle,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    subgroup,
    subgroup_generated,
    symmetric3,
)
from .grouprings import induced_ideal
from .ideals import (
    Ideal,
    IdealError,
    annihilator_of_element,
    ideal_generated,
    ideal_power,
    jacobson_radical,
    radical_series,
    socle_series,
)
from .modules import AModule, ModuleError, ideal_as_module, regular_module, restrict, trivial_module


class SceneError(ValueError):
    """A parse/validation error with the TOML path that caused it."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class Scene:
    p: int
    algebra: Algebra
    group: Optional[Group] = None
    ideals: dict[str, Ideal] = field(default_factory=dict)
    modules: dict[str, AModule] = field(default_factory=dict)
    command: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)


def _build_group(spec: dict, path: str) -> Group:
    builder = spec.get("builder")
    if builder == "cyclic":
        return cyclic(int(spec.get("n", 0)))
    if builder == "dihedral":
        return dihedral(int(spec.get("n", 0)))
    if builder == "quaternion8":
        return quaternion8()
    if builder == "symmetric3":
        return symmetric3()
    if builder == "direct_product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SceneError(f"{path}.factors", "need at least two factors")
        g = _build_group(factors[0], f"{path}.factors[0]")
        for t, f in enumerate(factors[1:], start=1):
            g = direct_product(g, _build_group(f, f"{path}.factors[{t}]"))
        return g
    if "table" in spec:
        try:
            return Group(np.asarray(spec["table"]), int(spec.get("identity", 0)))
        except GroupError as e:
            raise SceneError(f"{path}.table", str(e))
    raise SceneError(f"{path}.builder", f"unknown group builder {builder!r}")


def _build_algebra(spec: dict, p: int, grp: Optional[Group], path: str) -> Algebra:
    builder = spec.get("builder")
    if builder == "group":
        if grp is None:
            raise SceneError(path, "builder 'group' needs a [group] table")
        return group_algebra(grp, p)
    if builder == "qci":
        try:
            return quantum_complete_intersection(
                p, int(spec.get("q", -1)), int(spec["m"]), int(spec["n"])
            )
        except KeyError as e:
            raise SceneError(f"{path}.{e.args[0]}", "missing parameter")
        except AlgebraError as e:
            raise SceneError(path, str(e))
    if builder == "structure":
        dim = spec.get("dim")
        entries = spec.get("entries")
        unit = spec.get("unit")
        if not isinstance(dim, int) or dim < 1:
            raise SceneError(f"{path}.dim", "positive integer required")
        if not isinstance(entries, list):
            raise SceneError(f"{path}.entries", "list of [i, j, k, value] required")
        c = np.zeros((dim, dim, dim), dtype=np.int64)
        for t, row in enumerate(entries):
            if not (isinstance(row, list) and len(row) == 4):
                raise SceneError(f"{path}.entries[{t}]", "expected [i, j, k, value]")
            i, j, k, val = row
            if not all(0 <= x < dim for x in (i, j, k)):
                raise SceneError(f"{path}.entries[{t}]", "index out of range")
            c[i, j, k] = val
        if not isinstance(unit, list) or len(unit) != dim:
            raise SceneError(f"{path}.unit", f"vector of length {dim} required")
        try:
            return new_algebra(p, c, unit, spec.get("labels"))
        except AlgebraError as e:
            raise SceneError(path, str(e))
    raise SceneError(f"{path}.builder", f"unknown algebra builder {builder!r}")


def _resolve_element(a: Algebra, spec: dict, path: str) -> np.ndarray:
    if "element" in spec:
        v = spec["element"]
        if not isinstance(v, list) or len(v) != a.dim:
            raise SceneError(f"{path}.element", f"vector of length {a.dim} required")
        return np.asarray(v, dtype=np.int64) % a.p
    if "element_label" in spec:
        lbl = spec["element_label"]
        for i in range(a.dim):
            if a.label(i) == lbl:
                return a.basis_vector(i)
        raise SceneError(f"{path}.element_label", f"no basis vector labelled {lbl!r}")
    raise SceneError(path, "need 'element' or 'element_label'")


def _resolve_subgroup(grp: Optional[Group], spec: dict, path: str) -> SubgroupHandle:
    if grp is None:
        raise SceneError(path, "subgroup construction needs a [group] table")
    try:
        if "subgroup" in spec:
            return subgroup(grp, [int(x) for x in spec["subgroup"]])
        if "subgroup_gens" in spec:
            return subgroup_generated(grp, [int(x) for x in spec["subgroup_gens"]])
    except GroupError as e:
        raise SceneError(path, str(e))
    raise SceneError(path, "need 'subgroup' or 'subgroup_gens'")


def _build_ideal(a: Algebra, grp: Optional[Group], spec: dict, path: str) -> Ideal:
    kind = spec.get("kind")
    try:
        if kind == "radical":
            return jacobson_radical(a)
        if kind == "radical_power":
            n = int(spec.get("power", 1))
            series = radical_series(a)
            if n < 1:
                raise SceneError(f"{path}.power", "power must be >= 1")
            return series[min(n, len(series)) - 1]
        if kind == "socle":
            n = int(spec.get("power", 1))
            series = socle_series(a)
            if n < 1:
                raise SceneError(f"{path}.power", "power must be >= 1")
            return series[min(n, len(series)) - 1]
        if kind == "induced":
            return induced_ideal(a, _resolve_subgroup(grp, spec, path))
        if kind == "ann":
            return annihilator_of_element(a, _resolve_element(a, spec, path))
        if kind == "generators":
            gens = spec.get("generators")
            if not isinstance(gens, list):
                raise SceneError(f"{path}.generators", "list of vectors required")
            vecs = []
            for t, g in enumerate(gens):
                if not isinstance(g, list) or len(g) != a.dim:
                    raise SceneError(
                        f"{path}.generators[{t}]",
                        f"vector of length {a.dim} required",
                    )
                vecs.append(np.asarray(g, dtype=np.int64))
            return ideal_generated(a, vecs)
    except (IdealError, GFError) as e:
        raise SceneError(path, str(e))
    raise SceneError(f"{path}.kind", f"unknown ideal kind {kind!r}")


def _build_module(
    a: Algebra, ideals: dict[str, Ideal], spec: dict, path: str
) -> AModule:
    kind = spec.get("kind")
    try:
        if kind == "regular":
            return regular_module(a)
        if kind == "trivial":
            return trivial_module(a)
        if kind == "ideal":
            name = spec.get("ideal")
            if name not in ideals:
                raise SceneError(f"{path}.ideal", f"unknown ideal {name!r}")
            return ideal_as_module(ideals[name])
        if kind == "quotient_regular":
            name = spec.get("ideal")
            if name not in ideals:
                raise SceneError(f"{path}.ideal", f"unknown ideal {name!r}")
            from .ideals import quotient_by

            q, proj = quotient_by(ideals[name])
            return restrict(proj, regular_module(q))
        if kind == "matrices":
            mats = spec.get("matrices")
            if not isinstance(mats, list) or len(mats) != a.dim:
                raise SceneError(
                    f"{path}.matrices", f"need one matrix per basis vector ({a.dim})"
                )
            return AModule(a, len(mats[0]), np.asarray(mats, dtype=np.int64))
    except (ModuleError, IdealError) as e:
        raise SceneError(path, str(e))
    raise SceneError(f"{path}.kind", f"unknown module kind {kind!r}")


def parse_scene(text: bytes) -> Scene:
    try:
        data = tomllib.loads(text.decode("utf-8"))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
        raise SceneError("<document>", f"TOML parse failure: {e}")
    if data.get("format", 1) != 1:
        raise SceneError("format", "unsupported scene format")
    p = data.get("p")
    if not isinstance(p, int):
        raise SceneError("p", "prime modulus required")
    try:
        check_prime(p)
    except GFError as e:
        raise SceneError("p", str(e))
    grp = None
    if "group" in data:
        grp = _build_group(data["group"], "group")
    if "algebra" not in data:
        raise SceneError("algebra", "scene needs an [algebra] table")
    a = _build_algebra(data["algebra"], p, grp, "algebra")
    scene = Scene(p, a, grp, raw=data)
    for t, spec in enumerate(data.get("ideals", [])):
        name = spec.get("name", f"I{t}")
        scene.ideals[name] = _build_ideal(a, grp, spec, f"ideals[{t}]")
    for t, spec in enumerate(data.get("modules", [])):
        name = spec.get("name", f"M{t}")
        scene.modules[name] = _build_module(a, scene.ideals, spec, f"modules[{t}]")
    scene.command = data.get("command", {})
    return scene
