"""
Family specifiers: pi:n, nc:n, ncbd:n:S, shuffle:m:n, dom:n, tamari:n,
bool:n, chain:n.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from engines.families.basic import boolean_lattice, chain
from engines.families.dominance import dominance_lattice, dominance_run_order
from engines.families.partitions import nc_atom_order, noncrossing_lattice, partition_lattice
from engines.families.shuffles import shuffle_atom_order, shuffle_poset
from engines.families.signed import ncbd_atom_order, ncbd_lattice
from engines.families.tamari import tamari_lattice
from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder, incomparability_order
from shared.exceptions import UsageError, ValidationError
from shared.utils import parse_int_list

_BUILDERS: Dict[str, Tuple[int, Callable[..., FiniteLattice]]] = {
    "pi": (1, partition_lattice),
    "nc": (1, noncrossing_lattice),
    "ncbd": (2, ncbd_lattice),
    "shuffle": (2, shuffle_poset),
    "dom": (1, dominance_lattice),
    "tamari": (1, tamari_lattice),
    "bool": (1, boolean_lattice),
    "chain": (1, chain),
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Tuple

    def build(self) -> FiniteLattice:
        return _BUILDERS[self.name][1](*self.params)

    def canonical_order(self) -> AtomOrder:
        """The family's own atom order, hosted on ``build()``"""
        if self.name == "nc":
            return nc_atom_order(self.params[0], "rank")
        if self.name == "ncbd":
            return ncbd_atom_order(*self.params)
        if self.name == "shuffle":
            return shuffle_atom_order(*self.params)
        if self.name == "dom":
            return dominance_run_order(self.params[0])
        return incomparability_order(self.build())

    def __str__(self) -> str:
        if self.name == "ncbd":
            n, s = self.params
            return f"ncbd:{n}:{','.join(str(k) for k in s)}"
        return ":".join([self.name] + [str(p) for p in self.params])


def parse_family_spec(text: str) -> Optional[FamilySpec]:
    """A FamilySpec for a known ``name:`` prefix, otherwise None"""
    name, sep, rest = text.partition(":")
    if not sep or name not in _BUILDERS:
        return None
    arity = _BUILDERS[name][0]
    fields = rest.split(":")
    if len(fields) != arity:
        raise UsageError(f"{name} takes {arity} parameter(s), got {text!r}", field="source", value=text)
    try:
        if name == "ncbd":
            return FamilySpec(name, (int(fields[0]), tuple(parse_int_list(fields[1], "S"))))
        return FamilySpec(name, tuple(int(f) for f in fields))
    except ValueError as e:
        raise UsageError(f"bad family specifier {text!r}: {e}", field="source", value=text) from e


def family_from_spec(text: str) -> FiniteLattice:
    spec = parse_family_spec(text)
    if spec is None:
        raise ValidationError(f"{text!r} is not a family specifier", field="source", value=text)
    return spec.build()


def canonical_order(text: str) -> AtomOrder:
    spec = parse_family_spec(text)
    if spec is None:
        raise UsageError(f"--canonical needs a family specifier, got {text!r}", field="source", value=text)
    return spec.canonical_order()
